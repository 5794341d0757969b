"""Declarative synthesis scenarios and the fixed scenario catalog."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

from ..errors import ScenarioInvalid
from .sources import PvParams, WindTurbineParams

PHASES = ("a", "b", "c")


class EventKind(str, enum.Enum):
    NORMAL = "Normal"
    ISLANDING = "Islanding"
    FAULT = "Fault"


class Disturbance(str, enum.Enum):
    NONE = "None"
    ISLANDING = "Islanding"
    FAULT_AG = "FaultAG"
    FAULT_BG = "FaultBG"
    FAULT_CG = "FaultCG"
    FAULT_AB = "FaultAB"
    FAULT_BC = "FaultBC"
    FAULT_CA = "FaultCA"
    FAULT_ABG = "FaultABG"
    FAULT_ABC = "FaultABC"

    @property
    def kind(self) -> EventKind:
        if self is Disturbance.NONE:
            return EventKind.NORMAL
        if self is Disturbance.ISLANDING:
            return EventKind.ISLANDING
        return EventKind.FAULT

    @property
    def faulted_phases(self) -> tuple:
        """Phase indices (0=a) involved in a fault; empty otherwise."""
        if self.kind is not EventKind.FAULT:
            return ()
        letters = self.value[len("Fault"):].rstrip("G").lower()
        return tuple(PHASES.index(ch) for ch in letters)


@dataclass(frozen=True)
class WindSource:
    penetration: float
    params: WindTurbineParams = field(default_factory=WindTurbineParams)
    mean_speed: float = 11.0
    omega_r: float = 2.2
    turbulence: float = 0.1
    kind: str = field(default="wind", init=False)


@dataclass(frozen=True)
class PvSource:
    penetration: float
    params: PvParams = field(default_factory=PvParams)
    voltage_fraction: float = 0.8  # operating point as a fraction of V_oc
    kind: str = field(default="pv", init=False)


@dataclass(frozen=True)
class DisturbanceTemplate:
    """Shape parameters of the injected events (per-unit, Hz, seconds)."""

    retained_voltage: float = 0.3
    fault_transient_amp: float = 0.5
    fault_transient_freq: float = 1400.0
    fault_transient_tau: float = 0.0015
    clearing_transient_ratio: float = 0.6
    frequency_drift: float = 1.5
    amplitude_drift: float = 0.10
    islanding_harmonics: tuple = ((5, 0.03), (7, 0.03), (11, 0.10), (13, 0.10))
    switching_freq: float = 1450.0
    switching_amp: float = 0.03
    disconnect_transient_amp: float = 0.4
    disconnect_transient_freq: float = 1400.0
    disconnect_transient_tau: float = 0.001


@dataclass(frozen=True)
class Scenario:
    label: str
    bus_id: int
    dg_mix: tuple = ()
    disturbance: Disturbance = Disturbance.NONE
    onset: float = 0.61
    duration: float = 0.39
    nominal_frequency: float = 50.0
    sample_rate: float = 3200.0
    total_duration: float = 1.0
    noise_std: float = 0.001
    seed: int = 0
    template: DisturbanceTemplate = field(default_factory=DisturbanceTemplate)

    def __post_init__(self):
        object.__setattr__(self, "disturbance", Disturbance(self.disturbance))
        object.__setattr__(self, "dg_mix", tuple(self.dg_mix))

    @property
    def kind(self) -> EventKind:
        return self.disturbance.kind

    @property
    def n_samples(self) -> int:
        return int(round(self.total_duration * self.sample_rate))

    @property
    def onset_sample(self) -> int:
        return int(math.ceil(self.onset * self.sample_rate - 1e-9))

    @property
    def end_sample(self) -> int:
        return int(math.ceil((self.onset + self.duration) * self.sample_rate - 1e-9))

    def validate(self) -> "Scenario":
        problems = []
        if not 0.0 <= self.onset < self.onset + self.duration <= self.total_duration + 1e-12:
            problems.append(
                f"need 0 <= onset < onset+duration <= total_duration "
                f"(onset={self.onset}, duration={self.duration}, total={self.total_duration})"
            )
        if self.nominal_frequency <= 0:
            problems.append("nominal_frequency must be positive")
        elif self.sample_rate < 32 * self.nominal_frequency:
            problems.append(f"sample_rate {self.sample_rate} below 32 x nominal_frequency")
        if self.noise_std < 0:
            problems.append("noise_std must be non-negative")
        if self.n_samples < 2:
            problems.append("scenario produces fewer than 2 samples")
        for src in self.dg_mix:
            if not isinstance(src, (WindSource, PvSource)):
                problems.append(f"unknown DG source {src!r}")
            elif not 0.0 <= src.penetration <= 1.0:
                problems.append(f"penetration {src.penetration} outside [0, 1]")
        if problems:
            raise ScenarioInvalid(f"scenario {self.label!r}: " + "; ".join(problems))
        return self

    def with_seed(self, seed: int) -> "Scenario":
        return replace(self, seed=seed)


# DG placement. Bus 13 hosts the wind turbine and bus 14 the first solar unit;
# penetration levels are not given, these are defaults.
BUS_DG = {
    11: (PvSource(penetration=0.25),),
    12: (WindSource(penetration=0.20), PvSource(penetration=0.15, voltage_fraction=0.75)),
    13: (WindSource(penetration=0.30, mean_speed=12.0),),
    14: (PvSource(penetration=0.30),),
}

# (bus, fault type, fault onset in seconds)
_TABLE_ROWS = (
    (11, Disturbance.FAULT_AG, 0.300),
    (12, Disturbance.FAULT_BG, 0.320),
    (13, Disturbance.FAULT_CG, 0.280),
    (11, Disturbance.FAULT_AB, 0.310),
    (12, Disturbance.FAULT_BC, 0.290),
    (13, Disturbance.FAULT_CA, 0.330),
)

FAULT_DURATION = 0.1
ISLANDING_ONSET = 0.61


def row_label(bus: int, disturbance: Disturbance) -> str:
    """Table-style row name, e.g. ``Bus-11 (AG)``."""
    return f"Bus-{bus} ({disturbance.value[len('Fault'):]})"


def scenario_for(bus: int, disturbance, *, label: str | None = None, seed: int = 0, **overrides) -> Scenario:
    """Scenario at ``bus`` with that bus's DG mix and default event timing."""
    disturbance = Disturbance(disturbance)
    if disturbance.kind is EventKind.FAULT:
        timing = dict(onset=0.3, duration=FAULT_DURATION)
    else:
        timing = dict(onset=ISLANDING_ONSET, duration=1.0 - ISLANDING_ONSET)
    timing.update(overrides)
    return Scenario(
        label=label or f"bus{bus}_{disturbance.value.lower()}",
        bus_id=bus,
        dg_mix=BUS_DG.get(bus, ()),
        disturbance=disturbance,
        seed=seed,
        **timing,
    )


def catalog() -> list:
    """Six fault scenarios plus six islanding scenarios at the same buses.

    Order: for each table row, the fault case followed by its islanding pair.
    """
    out = []
    for i, (bus, fault, onset) in enumerate(_TABLE_ROWS):
        tag = fault.value[len("Fault"):].lower()
        out.append(scenario_for(bus, fault, label=f"bus{bus}_{tag}_fault", seed=1000 + 2 * i, onset=onset))
        drift = DisturbanceTemplate.amplitude_drift * (1 if i % 2 == 0 else -1)
        out.append(
            scenario_for(
                bus,
                Disturbance.ISLANDING,
                label=f"bus{bus}_{tag}_islanding",
                seed=1001 + 2 * i,
                template=DisturbanceTemplate(amplitude_drift=drift),
            )
        )
    return out


def catalog_pairs() -> list:
    """``(row label, fault scenario, islanding scenario)`` for each table row."""
    cat = catalog()
    return [
        (row_label(fault.bus_id, fault.disturbance), fault, isl)
        for fault, isl in zip(cat[0::2], cat[1::2])
    ]


def normal_scenarios() -> list:
    """Two disturbance-free cases used to calibrate the presence gate."""
    return [
        scenario_for(11, Disturbance.NONE, label="bus11_normal", seed=2001),
        scenario_for(13, Disturbance.NONE, label="bus13_normal", seed=2002),
    ]
