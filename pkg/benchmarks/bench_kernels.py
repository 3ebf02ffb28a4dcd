"""Compare the numba and numpy kernel backends.

Times the array J0/J1 evaluation and one end-to-end finite-difference
residual run under each backend, reloading the package modules with the
CHECKERBOARD_NO_NUMBA flag toggled. The numba path pays a one-off JIT
compilation that a warmup call absorbs before timing.

Run:
    python3 benchmarks/bench_kernels.py [--size 2000000] [--repeats 5]
"""

from __future__ import annotations

import argparse
import importlib
import os
import time

import numpy as np


def load_modules(force_numpy: bool):
    if force_numpy:
        os.environ["CHECKERBOARD_NO_NUMBA"] = "1"
    else:
        os.environ.pop("CHECKERBOARD_NO_NUMBA", None)
    import checkerboard.kernels as kernels
    import checkerboard.dirac as dirac
    kernels = importlib.reload(kernels)
    dirac = importlib.reload(dirac)  # rebinds its j0_values/j1_values
    return kernels, dirac


def best_of(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_backend(force_numpy: bool, size: int, repeats: int) -> dict:
    kernels, dirac = load_modules(force_numpy)
    rng = np.random.default_rng(20260816)
    s = rng.uniform(0.0, 20.0, size)
    kernels.j0_values(s[:1000])  # warmup (JIT compile on the numba path)
    kernels.j1_values(s[:1000])
    region = dirac.Region(t0=0.5, t1=3.0, xfrac=0.4)
    dirac.dirac_residual(region, h=0.05)
    return {
        "backend": kernels.BACKEND,
        "j0": best_of(lambda: kernels.j0_values(s), repeats),
        "j1": best_of(lambda: kernels.j1_values(s), repeats),
        "residual": best_of(lambda: dirac.dirac_residual(region, h=0.01),
                            max(1, repeats // 2)),
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=2_000_000,
                    help="array length for the kernel timings (default %(default)s)")
    ap.add_argument("--repeats", type=int, default=5,
                    help="timing repetitions, best-of (default %(default)s)")
    args = ap.parse_args()

    numba_stats = bench_backend(force_numpy=False, size=args.size,
                                repeats=args.repeats)
    numpy_stats = bench_backend(force_numpy=True, size=args.size,
                                repeats=args.repeats)

    if numba_stats["backend"] != "numba":
        print("note: numba unavailable; both columns ran the numpy backend")

    print(f"\narray size {args.size}, best of {args.repeats}")
    print(f"{'kernel':<22}{numba_stats['backend']:>12}{numpy_stats['backend']:>12}{'speedup':>10}")
    for key, label in (("j0", "j0_values"), ("j1", "j1_values"),
                       ("residual", "dirac_residual h=0.01")):
        a, b = numba_stats[key], numpy_stats[key]
        print(f"{label:<22}{a:>11.4f}s{b:>11.4f}s{b / a:>9.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
