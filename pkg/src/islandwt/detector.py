"""Two-stage islanding / fault decision on level-1 wavelet details.

A waveform is first gated on the per-unit peak of its D1 band: anything at
or below ``gate_threshold`` is Normal. Otherwise the D1 energy is compared
with ``class_threshold``; above it is Islanding, at or below it is Fault.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .dwt import dwt_single_level
from .errors import MissingClass, NotSeparable, SignalTooShort
from .filters import FilterName, filter_bank
from .indices import PerformanceIndices, band_indices
from .synth.scenario import PHASES, EventKind
from .synth.waveform import Waveform


class ChannelPolicy(str, enum.Enum):
    WORST_PHASE = "WorstPhase"
    PHASE_A = "PhaseA"
    MEAN = "Mean"


@dataclass(frozen=True)
class DetectorConfig:
    filter_name: FilterName = FilterName.HAAR
    gate_threshold: float = 0.0
    class_threshold: float = 1.0
    channel_policy: ChannelPolicy = ChannelPolicy.WORST_PHASE

    def __post_init__(self):
        object.__setattr__(self, "filter_name", FilterName.parse(self.filter_name))
        object.__setattr__(self, "channel_policy", ChannelPolicy(self.channel_policy))
        if not self.gate_threshold >= 0:
            raise ValueError(f"gate_threshold must be >= 0, got {self.gate_threshold}")
        if not self.class_threshold > 0:
            raise ValueError(f"class_threshold must be > 0, got {self.class_threshold}")


@dataclass(frozen=True)
class DetectionVerdict:
    kind: EventKind
    indices: PerformanceIndices
    onset_sample: int | None
    channel_used: str
    peak: float  # gate statistic, max |d1| in per-unit


@dataclass(frozen=True)
class ChannelBand:
    """D1 band of the channel selected by a policy."""

    d1: np.ndarray
    indices: PerformanceIndices
    peak: float
    channel: str


def level1_details(w: Waveform, filter_name) -> np.ndarray:
    filt = filter_bank(filter_name)
    if w.n_samples < 2 * len(filt):
        raise SignalTooShort(f"need at least {2 * len(filt)} samples for {filt.name.value}, got {w.n_samples}")
    return np.stack([dwt_single_level(ch / w.base_voltage, filt)[1] for ch in w.channels])


def select_band(w: Waveform, filter_name, policy=ChannelPolicy.WORST_PHASE) -> ChannelBand:
    policy = ChannelPolicy(policy)
    details = level1_details(w, filter_name)
    label = "detail level 1"
    if policy is ChannelPolicy.MEAN:
        per_phase = [band_indices(d, label, w.n_samples) for d in details]
        indices = PerformanceIndices(
            std=float(np.mean([p.std for p in per_phase])),
            energy=float(np.mean([p.energy for p in per_phase])),
            band=label,
            signal_length=w.n_samples,
        )
        envelope = np.abs(details).mean(axis=0)
        return ChannelBand(envelope, indices, float(envelope.max()), "mean")
    if policy is ChannelPolicy.PHASE_A:
        p = 0
    else:
        p = int(np.argmax(np.abs(details).max(axis=1)))
    d1 = details[p]
    return ChannelBand(d1, band_indices(d1, label, w.n_samples), float(np.abs(d1).max()), PHASES[p])


def locate_event(d1, gate_threshold: float) -> int | None:
    """Signal-domain onset: twice the first coefficient index with |d1| > gate."""
    hits = np.flatnonzero(np.abs(np.asarray(d1)) > gate_threshold)
    if hits.size == 0:
        return None
    return 2 * int(hits[0])


def detect(w: Waveform, cfg: DetectorConfig) -> DetectionVerdict:
    band = select_band(w, cfg.filter_name, cfg.channel_policy)
    if band.peak <= cfg.gate_threshold:
        return DetectionVerdict(EventKind.NORMAL, band.indices, None, band.channel, band.peak)
    kind = EventKind.ISLANDING if band.indices.energy > cfg.class_threshold else EventKind.FAULT
    onset = locate_event(band.d1, cfg.gate_threshold)
    return DetectionVerdict(kind, band.indices, onset, band.channel, band.peak)


def calibrate(labeled, filter_name=FilterName.HAAR, channel_policy=ChannelPolicy.WORST_PHASE,
              gate_factor: float = 3.0) -> DetectorConfig:
    """Fit gate and class thresholds from ``(waveform, kind)`` pairs.

    The gate is ``gate_factor`` times the largest D1 peak seen on Normal
    examples; the class threshold is the geometric mean of the largest
    fault energy and the smallest islanding energy.
    """
    peaks = {k: [] for k in EventKind}
    energies = {k: [] for k in EventKind}
    for w, kind in labeled:
        kind = EventKind(kind)
        band = select_band(w, filter_name, channel_policy)
        peaks[kind].append(band.peak)
        energies[kind].append(band.indices.energy)
    missing = [k.value for k in EventKind if not peaks[k]]
    if missing:
        raise MissingClass(f"calibration set lacks examples of: {', '.join(missing)}")
    return thresholds_from(max(peaks[EventKind.NORMAL]), energies[EventKind.FAULT],
                           energies[EventKind.ISLANDING], filter_name, channel_policy, gate_factor)


def thresholds_from(normal_peak, fault_energies, islanding_energies, filter_name=FilterName.HAAR,
                    channel_policy=ChannelPolicy.WORST_PHASE, gate_factor: float = 3.0) -> DetectorConfig:
    fault_max = max(fault_energies)
    isl_min = min(islanding_energies)
    if fault_max >= isl_min:
        raise NotSeparable(fault_max, isl_min)
    if fault_max > 0:
        threshold = math.sqrt(fault_max * isl_min)
    else:
        threshold = 0.5 * isl_min
    return DetectorConfig(
        filter_name=filter_name,
        gate_threshold=gate_factor * normal_peak,
        class_threshold=threshold,
        channel_policy=channel_policy,
    )
