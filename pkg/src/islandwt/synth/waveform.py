"""Three-phase waveform container and its CSV form (``t,va,vb,vc``)."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import IslandwtError
from .scenario import PHASES, EventKind

CSV_HEADER = ("t", "va", "vb", "vc")


class MalformedWaveform(IslandwtError, ValueError):
    pass


@dataclass(frozen=True)
class EventLabel:
    kind: EventKind
    onset_sample: int | None


@dataclass(frozen=True)
class Waveform:
    sample_rate: float
    channels: np.ndarray = field(repr=False)  # shape (3, n)
    base_voltage: float = 1.0
    labels: EventLabel | None = None

    def __post_init__(self):
        ch = np.array(self.channels, dtype=float)
        if ch.ndim != 2 or ch.shape[0] != 3:
            raise MalformedWaveform(f"expected 3 channels, got shape {ch.shape}")
        if not np.all(np.isfinite(ch)):
            raise MalformedWaveform("waveform contains non-finite values")
        ch.setflags(write=False)
        object.__setattr__(self, "channels", ch)

    @property
    def n_samples(self) -> int:
        return self.channels.shape[1]

    @property
    def time(self) -> np.ndarray:
        return np.arange(self.n_samples) / self.sample_rate

    def phase(self, name: str) -> np.ndarray:
        return self.channels[PHASES.index(name.lower().lstrip("v"))]

    def scaled(self, factor: float) -> "Waveform":
        return Waveform(self.sample_rate, self.channels * factor, self.base_voltage, self.labels)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(CSV_HEADER) + "\n")
        for i, t in enumerate(self.time):
            va, vb, vc = self.channels[:, i]
            buf.write(f"{t:.9f},{va:.9g},{vb:.9g},{vc:.9g}\n")
        return buf.getvalue()

    def write_csv(self, path) -> None:
        Path(path).write_text(self.to_csv(), newline="\n")

    def rounded(self) -> "Waveform":
        """Copy with values rounded exactly as :meth:`to_csv` prints them."""
        return Waveform.from_csv(self.to_csv(), labels=self.labels, base_voltage=self.base_voltage)

    @classmethod
    def from_csv(cls, text: str, labels: EventLabel | None = None, base_voltage: float = 1.0) -> "Waveform":
        rows = csv.reader(io.StringIO(text))
        try:
            header = next(rows)
        except StopIteration:
            raise MalformedWaveform("empty waveform file") from None
        if tuple(h.strip() for h in header) != CSV_HEADER:
            raise MalformedWaveform(f"line 1: expected header {','.join(CSV_HEADER)}, got {','.join(header)}")
        data = []
        for lineno, row in enumerate(rows, start=2):
            if not row:
                continue
            if len(row) != 4:
                raise MalformedWaveform(f"line {lineno}: expected 4 fields, got {len(row)}")
            try:
                data.append([float(v) for v in row])
            except ValueError:
                raise MalformedWaveform(f"line {lineno}: non-numeric value in {row}") from None
        if len(data) < 2:
            raise MalformedWaveform("waveform needs at least 2 samples")
        arr = np.array(data)
        t = arr[:, 0]
        dt = np.diff(t)
        if np.any(dt <= 0):
            raise MalformedWaveform("time column must be strictly increasing")
        fs = (t.shape[0] - 1) / (t[-1] - t[0])
        fs = float(f"{fs:.9g}")
        if not np.all(np.isfinite(arr)):
            raise MalformedWaveform("waveform contains non-finite values")
        return cls(fs, arr[:, 1:].T, base_voltage=base_voltage, labels=labels)

    @classmethod
    def read_csv(cls, path, labels: EventLabel | None = None) -> "Waveform":
        return cls.from_csv(Path(path).read_text(), labels=labels)
