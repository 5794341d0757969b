"""Orthonormal two-channel filter banks.

All filters are built numerically at first use and cached:

* Haar / Db1 -- the 2-tap solution of sum(h) = sqrt(2), sum(h**2) = 1.
* Db4 -- 8-tap Daubechies filter with 4 vanishing moments, by spectral
  factorisation of the maxflat half-band polynomial.
* Coif -- 6-tap Coiflet (closed form in sqrt(7)).
* Dmey -- 62-tap discrete Meyer approximation: the Meyer lowpass response is
  sampled, truncated, then projected onto the set of exactly orthonormal
  filters by Gauss-Newton iteration.

The highpass is always ``g[k] = (-1)**k * h[L-1-k]``.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import UnsupportedWavelet

SQRT2 = math.sqrt(2.0)


class FilterName(str, enum.Enum):
    HAAR = "Haar"
    DB1 = "Db1"
    DB4 = "Db4"
    COIF = "Coif"
    DMEY = "Dmey"

    @classmethod
    def parse(cls, name: "str | FilterName") -> "FilterName":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        for member in cls:
            if member.value.lower() == key:
                return member
        raise UnsupportedWavelet(f"unsupported wavelet {name!r}; expected one of {[m.value for m in cls]}")


@dataclass(frozen=True)
class WaveletFilter:
    name: FilterName
    lowpass: np.ndarray = field(repr=False)
    highpass: np.ndarray = field(repr=False)
    vanishing_moments: int

    def __post_init__(self):
        self.lowpass.setflags(write=False)
        self.highpass.setflags(write=False)

    def __len__(self):
        return self.lowpass.shape[0]


def qmf(lowpass: np.ndarray) -> np.ndarray:
    """Quadrature mirror highpass: g[k] = (-1)^k h[L-1-k]."""
    taps = lowpass.shape[0]
    signs = np.where(np.arange(taps) % 2 == 0, 1.0, -1.0)
    return signs * lowpass[::-1]


def _haar() -> np.ndarray:
    return np.array([1.0 / SQRT2, 1.0 / SQRT2])


def daubechies_lowpass(p: int) -> np.ndarray:
    """2p-tap Daubechies lowpass via spectral factorisation.

    |H(w)|^2 = 2 cos^{2p}(w/2) P(sin^2(w/2)) with P(y) = sum_k C(p-1+k, k) y^k.
    Each root y_i of P maps to a reciprocal pair of z roots through
    y = (2 - z - 1/z)/4; the minimum-phase root (|z| < 1) is kept.
    """
    coeffs = [comb(p - 1 + k, k) for k in range(p)]
    y_roots = np.roots(coeffs[::-1]) if p > 1 else np.array([])
    z_roots = []
    for y in y_roots:
        # z^2 - (2 - 4y) z + 1 = 0
        b = 2.0 - 4.0 * y
        disc = np.sqrt(b * b - 4.0 + 0j)
        z1, z2 = (b + disc) / 2.0, (b - disc) / 2.0
        z_roots.append(z1 if abs(z1) < 1.0 else z2)
    poly = np.array([1.0 + 0j])
    for _ in range(p):
        poly = np.convolve(poly, [1.0, 1.0])
    for z in z_roots:
        poly = np.convolve(poly, [1.0, -z])
    h = np.real(poly)
    return h * (SQRT2 / h.sum())


def _coiflet1() -> np.ndarray:
    s7 = math.sqrt(7.0)
    h = np.array([-3.0 + s7, 1.0 - s7, 14.0 - 2.0 * s7, 14.0 + 2.0 * s7, 5.0 + s7, 1.0 - s7]) / 16.0
    return h / SQRT2


def _meyer_nu(x):
    x = np.clip(x, 0.0, 1.0)
    return x**4 * (35.0 - 84.0 * x + 70.0 * x**2 - 20.0 * x**3)


def _meyer_response(w):
    a = np.abs(w)
    out = np.zeros_like(a)
    out[a <= np.pi / 3] = 1.0
    band = (a > np.pi / 3) & (a < 2 * np.pi / 3)
    out[band] = np.cos(0.5 * np.pi * _meyer_nu(3.0 * a[band] / np.pi - 1.0))
    return out


def _orthonormality_residual(h):
    half = h.shape[0] // 2
    res = [h @ h - 1.0]
    res += [h[: -2 * m] @ h[2 * m:] for m in range(1, half)]
    res.append(np.sum(h[0::2]) - np.sum(h[1::2]))
    return np.array(res)


def _orthonormality_jacobian(h):
    taps = h.shape[0]
    half = taps // 2
    jac = np.zeros((half + 1, taps))
    jac[0] = 2.0 * h
    for m in range(1, half):
        jac[m, : -2 * m] += h[2 * m:]
        jac[m, 2 * m:] += h[: -2 * m]
    jac[half] = np.where(np.arange(taps) % 2 == 0, 1.0, -1.0)
    return jac


def project_orthonormal(h0: np.ndarray, tol: float = 1e-15, max_iter: int = 200) -> np.ndarray:
    """Nearby exactly orthonormal lowpass with a zero at z = -1.

    Solves sum_n h[n] h[n+2m] = delta_m and H(-1) = 0 by minimum-norm
    Gauss-Newton steps. A truncated pseudo-inverse is used while far from
    feasible because symmetric starting points make the Jacobian singular.
    """
    h = np.array(h0, dtype=float)
    rcond = 1e-6
    prev = np.inf
    for _ in range(max_iter):
        res = _orthonormality_residual(h)
        worst = np.abs(res).max()
        if worst < tol:
            break
        if worst > 0.5 * prev:
            rcond = max(rcond * 1e-2, 1e-14)
        prev = worst
        h = h - np.linalg.pinv(_orthonormality_jacobian(h), rcond=rcond) @ res
    if h.sum() < 0:
        h = -h
    return h


def meyer_truncated(taps: int = 62, grid: int = 1 << 14) -> np.ndarray:
    """Truncated (not orthonormal) discrete Meyer lowpass, half-sample centred."""
    w = 2 * np.pi * np.fft.rfftfreq(grid)
    resp = _meyer_response(w)
    n = np.arange(taps) - (taps - 1) / 2.0
    # real even response -> h[n] = sqrt2/(2pi) * int m0(w) cos(w n) dw
    weights = np.full(w.shape[0], 2.0)
    weights[0] = 1.0
    weights[-1] = 1.0
    return SQRT2 * (np.cos(np.outer(n, w)) @ (weights * resp)) / grid


def _dmey() -> np.ndarray:
    return project_orthonormal(meyer_truncated(62))


_BUILDERS = {
    FilterName.HAAR: (_haar, 1),
    FilterName.DB1: (_haar, 1),
    FilterName.DB4: (lambda: daubechies_lowpass(4), 4),
    FilterName.COIF: (_coiflet1, 2),
    FilterName.DMEY: (_dmey, 1),
}


@functools.lru_cache(maxsize=None)
def _cached(name: FilterName) -> WaveletFilter:
    build, vm = _BUILDERS[name]
    lo = np.ascontiguousarray(build(), dtype=float)
    return WaveletFilter(name=name, lowpass=lo, highpass=qmf(lo), vanishing_moments=vm)


def filter_bank(name: "str | FilterName") -> WaveletFilter:
    """Return the named orthonormal filter pair.

    ``name`` is case-insensitive; unknown names raise
    :class:`~islandwt.errors.UnsupportedWavelet`.
    """
    return _cached(FilterName.parse(name))
