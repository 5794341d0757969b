"""Hot numeric loops.

Every kernel exists twice: a loop version compiled by numba and a vectorised
numpy version. The public names at the bottom dispatch to one of them
according to :data:`islandwt._accel.USE_NUMBA`; both variants stay importable
so tests and the benchmark can compare them.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

# --- periodic two-channel analysis / synthesis ------------------------------


def analysis_np(x, lo, hi):
    n = x.shape[0]
    half = n // 2
    idx = (2 * np.arange(half)[:, None] + np.arange(lo.shape[0])[None, :]) % n
    seg = x[idx]
    return seg @ lo, seg @ hi


def synthesis_np(approx, detail, lo, hi):
    half = approx.shape[0]
    n = 2 * half
    taps = lo.shape[0]
    idx = (2 * np.arange(half)[:, None] + np.arange(taps)[None, :]) % n
    contrib = approx[:, None] * lo[None, :] + detail[:, None] * hi[None, :]
    out = np.zeros(n)
    np.add.at(out, idx.ravel(), contrib.ravel())
    return out


@njit
def analysis_nb(x, lo, hi):
    n = x.shape[0]
    half = n // 2
    taps = lo.shape[0]
    a = np.zeros(half)
    d = np.zeros(half)
    for i in range(half):
        sa = 0.0
        sd = 0.0
        base = 2 * i
        for k in range(taps):
            v = x[(base + k) % n]
            sa += lo[k] * v
            sd += hi[k] * v
        a[i] = sa
        d[i] = sd
    return a, d


@njit
def synthesis_nb(approx, detail, lo, hi):
    half = approx.shape[0]
    n = 2 * half
    taps = lo.shape[0]
    out = np.zeros(n)
    for i in range(half):
        ai = approx[i]
        di = detail[i]
        base = 2 * i
        for k in range(taps):
            out[(base + k) % n] += lo[k] * ai + hi[k] * di
    return out


# --- direct DFT power spectrum ----------------------------------------------
# Rows of a 2-D array are transformed independently. Output is |X_k|^2 for
# k = 0..n-1, unnormalised. Input is real, so only k <= n/2 is summed and the
# rest mirrored.

_BLOCK = 256


def dft_power_np(frames):
    m, n = frames.shape
    ang = 2.0 * np.pi * np.arange(n) / n
    cos_t = np.cos(ang)
    sin_t = np.sin(ang)
    out = np.empty((m, n))
    t = np.arange(n)
    half = n // 2 + 1
    for k0 in range(0, half, _BLOCK):
        k = np.arange(k0, min(k0 + _BLOCK, half))
        idx = (k[:, None] * t[None, :]) % n
        re = frames @ cos_t[idx].T
        im = frames @ sin_t[idx].T
        out[:, k0:k0 + k.shape[0]] = re * re + im * im
    out[:, half:] = out[:, n - half:0:-1]
    return out


@njit
def dft_power_nb(frames):
    m, n = frames.shape
    cos_t = np.empty(n)
    sin_t = np.empty(n)
    for j in range(n):
        ang = 2.0 * np.pi * j / n
        cos_t[j] = np.cos(ang)
        sin_t[j] = np.sin(ang)
    out = np.empty((m, n))
    ck = np.empty(n)
    sk = np.empty(n)
    for k in range(n // 2 + 1):
        # twiddle row for this bin, shared by every frame
        j = 0
        for t in range(n):
            ck[t] = cos_t[j]
            sk[t] = sin_t[j]
            j += k
            if j >= n:
                j -= n
        for r in range(m):
            re = 0.0
            im = 0.0
            for t in range(n):
                v = frames[r, t]
                re += v * ck[t]
                im += v * sk[t]
            out[r, k] = re * re + im * im
    for k in range(n // 2 + 1, n):
        for r in range(m):
            out[r, k] = out[r, n - k]
    return out


if USE_NUMBA:
    analysis, synthesis, dft_power = analysis_nb, synthesis_nb, dft_power_nb
else:
    analysis, synthesis, dft_power = analysis_np, synthesis_np, dft_power_np
