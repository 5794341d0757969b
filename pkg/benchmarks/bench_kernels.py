"""Time the numba and numpy variants of each hot kernel side by side.

    python benchmarks/bench_kernels.py [--repeat 20] [--sizes 1024,4096,16384]

The first numba call per signature is compiled (or loaded from cache) before
timing starts, so the figures are steady-state.
"""
import argparse
import timeit

import numpy as np

from islandwt import kernels
from islandwt._accel import HAVE_NUMBA
from islandwt.filters import filter_bank


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def cases(n, rng):
    x = rng.standard_normal(n)
    frames = rng.standard_normal((max(1, n // 256), 256))
    for name in ("Haar", "Db4", "Dmey"):
        f = filter_bank(name)
        lo, hi = np.asarray(f.lowpass), np.asarray(f.highpass)
        a, d = kernels.analysis_np(x, lo, hi)
        yield (f"analysis {name}", lambda: kernels.analysis_np(x, lo, hi), lambda: kernels.analysis_nb(x, lo, hi))
        yield (f"synthesis {name}", lambda: kernels.synthesis_np(a, d, lo, hi),
               lambda: kernels.synthesis_nb(a, d, lo, hi))
    single = x[None, : min(n, 4096)].copy()
    yield (f"dft_power 1x{single.shape[1]}", lambda: kernels.dft_power_np(single),
           lambda: kernels.dft_power_nb(single))
    yield (f"dft_power {frames.shape[0]}x256", lambda: kernels.dft_power_np(frames),
           lambda: kernels.dft_power_nb(frames))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--sizes", default="1024,4096,16384")
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare (pip install numba)")
    rng = np.random.default_rng(0)
    print(f"{'n':>6}  {'kernel':<22}{'numpy ms':>10}{'numba ms':>10}{'speedup':>9}")
    for n in (int(s) for s in args.sizes.split(",")):
        for label, np_fn, nb_fn in cases(n, rng):
            ref, got = np_fn(), nb_fn()
            for r, g in zip(ref if isinstance(ref, tuple) else (ref,), got if isinstance(got, tuple) else (got,)):
                assert np.allclose(r, g, rtol=1e-9, atol=1e-9 * max(1.0, np.abs(r).max())), label
            t_np = best_of(np_fn, args.repeat)
            t_nb = best_of(nb_fn, args.repeat)
            print(f"{n:>6}  {label:<22}{t_np * 1e3:>10.3f}{t_nb * 1e3:>10.3f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
