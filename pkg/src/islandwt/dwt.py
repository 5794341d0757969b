"""Periodic discrete wavelet transform.

Analysis is correlation followed by downsampling,
``a[n] = sum_k h[k] x[2n + k]`` with indices taken modulo the (even) input
length, and likewise for the detail band with ``g``. Inputs are padded by
repeating the final sample until the length is a multiple of ``2**levels``,
so every level halves exactly and the bank stays energy preserving.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DepthExceeded, EmptySignal, MalformedDecomposition
from .filters import WaveletFilter

BOUNDARY_MODE = "periodic"


@dataclass(frozen=True)
class DecompositionResult:
    """Coefficients of a ``levels``-deep decomposition.

    ``details[0]`` is the finest band (D1); ``details[-1]`` is DJ.
    """

    levels: int
    approx_final: np.ndarray = field(repr=False)
    details: tuple = field(repr=False)
    source_length: int
    padded_length: int
    boundary_mode: str = BOUNDARY_MODE

    def detail(self, level: int) -> np.ndarray:
        """Detail band by 1-based level number."""
        if not 1 <= level <= self.levels:
            raise IndexError(f"level {level} outside 1..{self.levels}")
        return self.details[level - 1]

    @property
    def coefficient_count(self) -> int:
        return self.approx_final.shape[0] + sum(d.shape[0] for d in self.details)


def _as_signal(signal) -> np.ndarray:
    x = np.ascontiguousarray(signal, dtype=float)
    if x.ndim != 1:
        raise ValueError("signal must be one-dimensional")
    if x.shape[0] == 0:
        raise EmptySignal("signal is empty")
    return x


def pad_to_multiple(x: np.ndarray, block: int) -> np.ndarray:
    """Repeat the last sample until ``len(x)`` is a multiple of ``block``."""
    extra = (-x.shape[0]) % block
    if extra == 0:
        return x
    return np.concatenate([x, np.full(extra, x[-1])])


def dwt_single_level(signal, filt: WaveletFilter):
    """One analysis step; returns ``(approx, detail)`` of length ceil(N/2)."""
    x = pad_to_multiple(_as_signal(signal), 2)
    return kernels.analysis(x, filt.lowpass, filt.highpass)


def dwt_multi_level(signal, filt: WaveletFilter, levels: int) -> DecompositionResult:
    x = _as_signal(signal)
    if levels < 1:
        raise DepthExceeded(f"levels must be >= 1, got {levels}")
    if 2**levels > x.shape[0]:
        raise DepthExceeded(f"{levels} levels need at least {2 ** levels} samples, got {x.shape[0]}")
    padded = pad_to_multiple(x, 2**levels)
    details = []
    approx = padded
    for _ in range(levels):
        approx, detail = kernels.analysis(approx, filt.lowpass, filt.highpass)
        details.append(detail)
    return DecompositionResult(
        levels=levels,
        approx_final=approx,
        details=tuple(details),
        source_length=x.shape[0],
        padded_length=padded.shape[0],
    )


def idwt(result: DecompositionResult, filt: WaveletFilter) -> np.ndarray:
    """Invert :func:`dwt_multi_level`; output is trimmed to ``source_length``."""
    if len(result.details) != result.levels:
        raise MalformedDecomposition(f"expected {result.levels} detail arrays, got {len(result.details)}")
    expected = result.padded_length
    for j, detail in enumerate(result.details, start=1):
        expected_j = result.padded_length >> j
        if np.shape(detail) != (expected_j,):
            raise MalformedDecomposition(f"detail level {j} has shape {np.shape(detail)}, expected ({expected_j},)")
        expected = expected_j
    if np.shape(result.approx_final) != (expected,):
        raise MalformedDecomposition(
            f"final approximation has shape {np.shape(result.approx_final)}, expected ({expected},)"
        )
    approx = np.asarray(result.approx_final, dtype=float)
    for detail in reversed(result.details):
        approx = kernels.synthesis(approx, np.asarray(detail, dtype=float), filt.lowpass, filt.highpass)
    return approx[: result.source_length]
