"""Time the compiled kernels against the numpy fallback.

Runs the decumulative rank transform and the leave-one-out Gini correlation
series on growing inputs and prints one table per kernel. Usable even when
the compiled extension is missing; the comparison column is then skipped.
"""

import argparse
import time

import numpy as np

from ginipca._core import kernels_numpy

try:
    from ginipca._core import _ckernels
except ImportError:
    _ckernels = None


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def fmt_seconds(value):
    if value < 1e-3:
        return f"{value * 1e6:8.1f} us"
    if value < 1.0:
        return f"{value * 1e3:8.2f} ms"
    return f"{value:8.3f} s "


def bench_ranks(sizes, repeats, rng):
    print("decumulative_ranks (half the columns carry ties)")
    header = f"{'n':>8} {'numpy':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    for n in sizes:
        x = rng.standard_normal(n)
        if n % 2 == 0:
            x = np.round(x, 2)
        py = best_of(repeats, kernels_numpy.decumulative_ranks, x)
        if _ckernels is None:
            print(f"{n:>8} {fmt_seconds(py):>12} {'-':>12} {'-':>8}")
            continue
        cc = best_of(repeats, _ckernels.decumulative_ranks, x)
        print(f"{n:>8} {fmt_seconds(py):>12} {fmt_seconds(cc):>12} {py / cc:7.1f}x")
    print()


def bench_loo(sizes, repeats, rng, nu):
    print(f"loo_gini_corr_series (nu = {nu:g})")
    header = f"{'n':>8} {'numpy':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    for n in sizes:
        x = rng.standard_normal(n)
        y = 0.5 * x + rng.standard_normal(n)
        py = best_of(repeats, kernels_numpy.loo_gini_corr_series, x, y, nu)
        if _ckernels is None:
            print(f"{n:>8} {fmt_seconds(py):>12} {'-':>12} {'-':>8}")
            continue
        cc = best_of(repeats, _ckernels.loo_gini_corr_series, x, y, nu)
        print(f"{n:>8} {fmt_seconds(py):>12} {fmt_seconds(cc):>12} {py / cc:7.1f}x")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--rank-sizes",
        default="100,1000,5000,20000",
        help="comma-separated input lengths for the rank kernel",
    )
    parser.add_argument(
        "--loo-sizes",
        default="100,500,1000,2000",
        help="comma-separated input lengths for the leave-one-out kernel",
    )
    parser.add_argument("--repeats", type=int, default=5, help="keep the best of this many runs")
    parser.add_argument("--nu", type=float, default=4.0, help="Gini order for the series kernel")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled extension not built; timing the numpy kernels only\n")
    rng = np.random.default_rng(args.seed)
    bench_ranks([int(s) for s in args.rank_sizes.split(",")], args.repeats, rng)
    bench_loo([int(s) for s in args.loo_sizes.split(",")], args.repeats, rng, args.nu)


if __name__ == "__main__":
    main()
