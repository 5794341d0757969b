"""Numba switch.

Kernels are compiled with numba when it is importable and the environment
variable ``ISLANDWT_DISABLE_NUMBA`` is unset (or ``0``). Otherwise the
vectorised numpy implementations are used. The flag is read once at import.
"""
import os

_FLAG = "ISLANDWT_DISABLE_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional extra
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get(_FLAG, "0").strip().lower() in ("", "0", "false", "no")


def njit(fn):
    """``numba.njit(cache=True)`` when numba is installed, else identity."""
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
