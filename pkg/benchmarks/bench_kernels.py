"""Compare the numba and pure-numpy integer diagonalization kernels.

Usage: python benchmarks/bench_kernels.py [--sizes 10 20 40] [--repeat 5]

Each case runs both backends on the same matrices, checks that the
invariant factors agree, and reports the best wall time of ``--repeat`` runs.
The numba column excludes compilation (one warm-up call first).
"""

import argparse
import time

import numpy as np

from ksbraid import _kernels


def sparse_incidence(n, rng):
    # shape of the Hom-complex matrices: sparse, entries in {-1, 0, 1}
    a = np.zeros((n, n + n // 2), dtype=np.int64)
    for i in range(n):
        cols = rng.choice(a.shape[1], size=3, replace=False)
        a[i, cols] = rng.choice([-1, 1], size=3)
    return a


def dense_small(n, rng):
    return rng.integers(-6, 7, size=(n, n), dtype=np.int64)


def best_time(fn, mats, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        for a in mats:
            fn(a)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40])
    ap.add_argument("--count", type=int, default=20, help="matrices per case")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _kernels.BACKEND != "numba":
        print("numba unavailable (or KSBRAID_DISABLE_NUMBA set); only the numpy path runs")
    rng = np.random.default_rng(0)
    print(f"{'case':<18}{'n':>5}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
    for kind, gen in (("sparse +-1", sparse_incidence), ("dense small", dense_small)):
        for n in args.sizes:
            mats = [gen(n, rng) for _ in range(args.count)]
            ref = [_kernels.invariant_factors(a, backend="numpy") for a in mats]
            t_np = best_time(lambda a: _kernels.invariant_factors(a, backend="numpy"), mats, args.repeat)
            if _kernels.BACKEND == "numba":
                _kernels.invariant_factors(mats[0], backend="numba")
                got = [_kernels.invariant_factors(a, backend="numba") for a in mats]
                assert got == ref, "backends disagree"
                t_nb = best_time(lambda a: _kernels.invariant_factors(a, backend="numba"), mats, args.repeat)
                print(f"{kind:<18}{n:>5}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x")
            else:
                print(f"{kind:<18}{n:>5}{t_np:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
