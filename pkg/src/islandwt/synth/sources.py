"""Wind turbine and photovoltaic source models."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateWind, SolverDiverged

BETZ_LIMIT = 0.593

# Cp(lambda, beta) = c1 (c2/li - c3 beta - c4) exp(-c5/li) + c6 lambda
# 1/li = 1/(lambda + 0.08 beta) - 0.035/(beta^3 + 1)
DEFAULT_CP_COEFFS = (0.5176, 116.0, 0.4, 5.0, 21.0, 0.0068)


@dataclass(frozen=True)
class WindTurbineParams:
    rho: float = 1.225
    area: float = math.pi * 40.0**2
    radius: float = 40.0
    pitch_deg: float = 0.0
    cp_coeffs: tuple = DEFAULT_CP_COEFFS
    cp_constant: float | None = None  # overrides the curve when set

    def __post_init__(self):
        if self.rho <= 0 or self.area <= 0 or self.radius <= 0:
            raise ValueError("rho, area and radius must be positive")
        if len(self.cp_coeffs) != 6:
            raise ValueError("cp_coeffs needs 6 coefficients")


@dataclass(frozen=True)
class PvParams:
    i_light: float = 8.0
    i_sat: float = 1e-9
    r_series: float = 0.3
    alpha: float = 1.5

    def __post_init__(self):
        if self.i_light < 0 or self.i_sat <= 0 or self.r_series < 0 or self.alpha <= 0:
            raise ValueError("require i_light >= 0, i_sat > 0, r_series >= 0, alpha > 0")

    @property
    def open_circuit_voltage(self) -> float:
        return self.alpha * math.log(self.i_light / self.i_sat + 1.0)


def tip_speed_ratio(radius, omega_r, v_wind):
    """Blade tip speed over wind speed, R * omega / v."""
    v = np.asarray(v_wind, dtype=float)
    if np.any(v <= 0):
        raise DegenerateWind(f"wind speed must be positive, got {v_wind}")
    out = radius * np.asarray(omega_r, dtype=float) / v
    return float(out) if out.ndim == 0 else out


def power_coefficient(p: WindTurbineParams, tsr):
    """Cp(lambda, beta) clamped to [0, Betz limit]."""
    tsr = np.asarray(tsr, dtype=float)
    if p.cp_constant is not None:
        cp = np.full(tsr.shape, float(p.cp_constant))
    else:
        c1, c2, c3, c4, c5, c6 = p.cp_coeffs
        beta = p.pitch_deg
        inv_li = 1.0 / (tsr + 0.08 * beta) - 0.035 / (beta**3 + 1.0)
        cp = c1 * (c2 * inv_li - c3 * beta - c4) * np.exp(-c5 * inv_li) + c6 * tsr
    cp = np.clip(cp, 0.0, BETZ_LIMIT)
    return float(cp) if cp.ndim == 0 else cp


def wind_power(p: WindTurbineParams, v_wind, omega_r):
    """Mechanical power 0.5 rho A Cp v^3 in watts; 0 where v_wind == 0.

    Accepts scalars or arrays of wind speed.
    """
    v = np.asarray(v_wind, dtype=float)
    if np.any(v < 0):
        raise ValueError("wind speed must be non-negative")
    moving = v > 0
    safe_v = np.where(moving, v, 1.0)
    tsr = p.radius * omega_r / safe_v
    cp = np.asarray(power_coefficient(p, tsr))
    power = np.where(moving, 0.5 * p.rho * p.area * cp * safe_v**3, 0.0)
    return float(power) if power.ndim == 0 else power


def _pv_residual(p: PvParams, v, i):
    return p.i_light - p.i_sat * math.expm1((v + i * p.r_series) / p.alpha) - i


def pv_current(p: PvParams, v: float, tol: float = 1e-10, max_iter: int = 200) -> float:
    """Terminal current of the single-diode model at voltage ``v``.

    Closed form when ``r_series == 0``; otherwise a bracketed Newton solve
    of the implicit equation until the residual is below ``tol``.
    """
    v = float(v)
    if p.r_series == 0.0:
        return p.i_light - p.i_sat * math.expm1(v / p.alpha)
    # residual is strictly decreasing in i
    hi = p.i_light + p.i_sat
    lo = min(p.i_light, -v / p.r_series)
    i = min(max(p.i_light - p.i_sat * math.expm1(v / p.alpha), lo), hi)
    for _ in range(max_iter):
        try:
            f = _pv_residual(p, v, i)
        except OverflowError:
            f = -math.inf
        if abs(f) < tol:
            return i
        if f > 0:
            lo = i
        else:
            hi = i
        slope = -p.i_sat * p.r_series / p.alpha * math.exp((v + i * p.r_series) / p.alpha) - 1.0 \
            if math.isfinite(f) else -math.inf
        step = i - f / slope if math.isfinite(slope) else math.nan
        i = step if lo < step < hi else 0.5 * (lo + hi)
        if hi - lo < 1e-15 * max(1.0, abs(i)):
            break
    f = _pv_residual(p, v, i)
    if abs(f) < tol:
        return i
    raise SolverDiverged(f"pv_current did not converge at V={v} (residual {f:.3e})")
