"""Cross-transform comparison of disturbance indices."""
from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .detector import ChannelPolicy, DetectorConfig, detect, select_band
from .filters import FilterName
from .spectral import StftConfig, dft_indices, stft_indices
from .synth.scenario import PHASES, EventKind

# transform name -> wavelet used for the index (None for Fourier baselines)
TRANSFORMS = {
    "FT": None,
    "STFT": None,
    "WT_dB1": FilterName.DB1,
    "WT_Haar": FilterName.HAAR,
    "WT_Coif": FilterName.COIF,
    "WT_Demey": FilterName.DMEY,
    "WT_dB4": FilterName.DB4,
}

# channel selection for the Fourier baselines uses this wavelet's D1
BASELINE_SELECTOR = FilterName.HAAR


class UnknownTransform(ValueError):
    pass


class ReportFormat(str, enum.Enum):
    CSV = "CsvTable"
    PRETTY = "PrettyTable"


def parse_transforms(names) -> list:
    names = [n.strip() for n in names if n and n.strip()]
    if not names:
        raise UnknownTransform("no transforms requested")
    lookup = {k.lower(): k for k in TRANSFORMS}
    out = []
    for n in names:
        if n.lower() not in lookup:
            raise UnknownTransform(f"unknown transform {n!r}; choose from {', '.join(TRANSFORMS)}")
        out.append(lookup[n.lower()])
    return out


def transform_indices(w, transform: str, policy=ChannelPolicy.WORST_PHASE, highband_fraction: float = 0.5):
    """Indices of one waveform under a named transform, on the policy-selected channel."""
    filt = TRANSFORMS[transform]
    if filt is not None:
        return select_band(w, filt, policy).indices
    band = select_band(w, BASELINE_SELECTOR, policy)
    if band.channel == "mean":
        channels = w.channels / w.base_voltage
    else:
        channels = [w.channels[PHASES.index(band.channel)] / w.base_voltage]
    if transform == "FT":
        per = [dft_indices(c, highband_fraction) for c in channels]
    else:
        per = [stft_indices(c, StftConfig(), highband_fraction) for c in channels]
    if len(per) == 1:
        return per[0]
    return type(per[0])(float(np.mean([p.std for p in per])), float(np.mean([p.energy for p in per])),
                        per[0].band, per[0].signal_length)


@dataclass(frozen=True)
class ReportRow:
    scenario: str
    transform: str
    std: float
    energy: float
    verdict: str
    onset: int | None


@dataclass
class RunReport:
    rows: list = field(default_factory=list)
    format: ReportFormat = ReportFormat.PRETTY

    def transforms(self) -> list:
        return list(dict.fromkeys(r.transform for r in self.rows))

    def summary(self) -> list:
        """Per transform: mean fault and islanding (std, energy), NaN if absent."""
        out = []
        for t in self.transforms():
            entry = {"transform": t}
            for kind in (EventKind.FAULT, EventKind.ISLANDING):
                sel = [r for r in self.rows if r.transform == t and r.verdict == kind.value]
                key = kind.value.lower()
                entry[f"{key}_std"] = float(np.mean([r.std for r in sel])) if sel else math.nan
                entry[f"{key}_energy"] = float(np.mean([r.energy for r in sel])) if sel else math.nan
            out.append(entry)
        return out

    def render(self, per_scenario: bool = False) -> str:
        if per_scenario:
            header = ["scenario", "transform", "std", "energy", "verdict", "onset"]
            body = [[r.scenario, r.transform, _num(r.std), _num(r.energy), r.verdict,
                     "" if r.onset is None else str(r.onset)] for r in self.rows]
        else:
            header = ["technique", "fault_std", "fault_energy", "islanding_std", "islanding_energy"]
            body = [[s["transform"], _num(s["fault_std"]), _num(s["fault_energy"]),
                     _num(s["islanding_std"]), _num(s["islanding_energy"])] for s in self.summary()]
        if self.format is ReportFormat.CSV:
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(body)
            return buf.getvalue()
        widths = [max(len(x) for x in col) for col in zip(header, *body)]
        lines = ["  ".join(c.ljust(wd) for c, wd in zip(row, widths)).rstrip() for row in [header, *body]]
        lines.insert(1, "  ".join("-" * wd for wd in widths))
        return "\n".join(lines) + "\n"


def _num(x) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return f"{x:.4g}"


def compare(labeled, transforms, policy=ChannelPolicy.WORST_PHASE, config: DetectorConfig | None = None,
            fmt=ReportFormat.PRETTY) -> RunReport:
    """Indices for every ``(name, waveform, kind)`` under every transform.

    Each row's verdict is the labelled kind, or the detector's verdict when
    ``config`` is given.
    """
    transforms = parse_transforms(transforms)
    report = RunReport(format=ReportFormat(fmt))
    for name, w, kind in labeled:
        verdict, onset = EventKind(kind).value, None
        if config is not None:
            v = detect(w, config)
            verdict, onset = v.kind.value, v.onset_sample
        for t in transforms:
            idx = transform_indices(w, t, policy)
            report.rows.append(ReportRow(name, t, idx.std, idx.energy, verdict, onset))
    return report
