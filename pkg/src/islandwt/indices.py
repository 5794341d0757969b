"""Energy and standard-deviation performance indices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dwt import DecompositionResult, dwt_multi_level
from .errors import EmptySignal, SignalTooShort
from .filters import WaveletFilter


@dataclass(frozen=True)
class PerformanceIndices:
    std: float
    energy: float
    band: str
    signal_length: int


def signal_energy(signal) -> float:
    """Unnormalised discrete energy, sum |x[n]|^2."""
    x = np.asarray(signal, dtype=float)
    if x.size == 0:
        raise EmptySignal("signal is empty")
    return float(x @ x)


def coefficient_energy(result: DecompositionResult) -> float:
    """Total energy of a decomposition: final approximation plus every detail band."""
    total = float(result.approx_final @ result.approx_final)
    for d in result.details:
        total += float(d @ d)
    return total


def band_indices(band, label: str, signal_length: int) -> PerformanceIndices:
    """Population STD and energy of a coefficient band."""
    b = np.asarray(band, dtype=float)
    return PerformanceIndices(
        std=float(np.std(b)) if b.size else 0.0,
        energy=float(b @ b),
        band=label,
        signal_length=int(signal_length),
    )


def compute_indices(signal, filt: WaveletFilter, level: int = 1) -> PerformanceIndices:
    """STD and energy of the level-``level`` detail band (D1 by default).

    Requires at least twice the filter length in samples.
    """
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1 or x.shape[0] == 0:
        raise EmptySignal("signal is empty")
    if x.shape[0] < 2 * len(filt):
        raise SignalTooShort(f"need at least {2 * len(filt)} samples for {filt.name.value}, got {x.shape[0]}")
    result = dwt_multi_level(x, filt, level)
    return band_indices(result.detail(level), f"detail level {level}", x.shape[0])
