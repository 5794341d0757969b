"""DFT and STFT baselines for the wavelet indices.

Spectra are normalised so that ``sum_k |X_k|^2 / N`` equals the time-domain
energy. The "high band" is every bin whose folded frequency
``min(k, N-k) / (N/2)`` is at least ``1 - highband_fraction``; with a
fraction of 1 all bins are kept.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EmptySignal, WindowTooLong
from .indices import PerformanceIndices


class WindowShape(str, enum.Enum):
    RECTANGULAR = "Rectangular"
    HANN = "Hann"


@dataclass(frozen=True)
class StftConfig:
    window_length: int = 64
    hop: int = 32
    window_shape: WindowShape = WindowShape.HANN

    def __post_init__(self):
        if self.window_length < 1:
            raise ValueError("window_length must be positive")
        if not 0 < self.hop <= self.window_length:
            raise ValueError(f"hop must be in (0, {self.window_length}], got {self.hop}")
        object.__setattr__(self, "window_shape", WindowShape(self.window_shape))

    def window(self) -> np.ndarray:
        if self.window_shape is WindowShape.RECTANGULAR:
            return np.ones(self.window_length)
        n = np.arange(self.window_length)
        # periodic Hann
        return 0.5 - 0.5 * np.cos(2.0 * np.pi * n / self.window_length)


def _check_fraction(fraction: float):
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"highband_fraction must be in (0, 1], got {fraction}")


def highband_mask(n: int, fraction: float) -> np.ndarray:
    k = np.arange(n)
    folded = np.minimum(k, n - k) / (n / 2.0)
    return folded >= 1.0 - fraction - 1e-12


def power_spectrum(signal) -> np.ndarray:
    """Parseval-normalised power |X_k|^2 / N for k = 0..N-1, by direct DFT."""
    x = np.ascontiguousarray(signal, dtype=float)
    if x.ndim != 1 or x.shape[0] == 0:
        raise EmptySignal("signal is empty")
    return kernels.dft_power(x[None, :])[0] / x.shape[0]


def dft_indices(signal, highband_fraction: float = 0.5) -> PerformanceIndices:
    _check_fraction(highband_fraction)
    power = power_spectrum(signal)
    hi = power[highband_mask(power.shape[0], highband_fraction)]
    mags = np.sqrt(hi)
    return PerformanceIndices(
        std=float(np.std(mags)),
        energy=float(hi.sum()),
        band=f"dft high band {highband_fraction:g}",
        signal_length=power.shape[0],
    )


def stft_frames(signal, cfg: StftConfig) -> np.ndarray:
    x = np.ascontiguousarray(signal, dtype=float)
    if x.ndim != 1 or x.shape[0] == 0:
        raise EmptySignal("signal is empty")
    if cfg.window_length > x.shape[0]:
        raise WindowTooLong(f"window of {cfg.window_length} samples exceeds signal of {x.shape[0]}")
    count = 1 + (x.shape[0] - cfg.window_length) // cfg.hop
    starts = np.arange(count) * cfg.hop
    return x[starts[:, None] + np.arange(cfg.window_length)[None, :]] * cfg.window()[None, :]


def stft_highband_series(signal, cfg: StftConfig, highband_fraction: float = 0.5) -> np.ndarray:
    """High-band energy of each STFT frame."""
    _check_fraction(highband_fraction)
    frames = stft_frames(signal, cfg)
    power = kernels.dft_power(np.ascontiguousarray(frames)) / cfg.window_length
    return power[:, highband_mask(cfg.window_length, highband_fraction)].sum(axis=1)


def stft_indices(signal, cfg: StftConfig | None = None, highband_fraction: float = 0.5) -> PerformanceIndices:
    cfg = cfg or StftConfig()
    series = stft_highband_series(signal, cfg, highband_fraction)
    return PerformanceIndices(
        std=float(np.std(series)),
        energy=float(series.sum()),
        band=f"stft high band {highband_fraction:g}",
        signal_length=int(np.shape(signal)[0]),
    )
