#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Run from a checkout where the extension was built in place
(``pip install -e .`` or ``python setup.py build_ext --inplace``):

    python benchmarks/bench_kernels.py
"""

import timeit

import numpy as np

from fracalc._kernels import _kernels_py

try:
    from fracalc._kernels import _kernels_cy
except ImportError:
    _kernels_cy = None


def best_time(fn, *args, repeat=5):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def bench(name, sizes, make_args):
    print(f"\n{name}")
    print(f"{'size':>8}  {'numpy':>12}  {'compiled':>12}  {'speedup':>8}")
    for size in sizes:
        args = make_args(size)
        t_py = best_time(getattr(_kernels_py, name), *args)
        if _kernels_cy is None:
            print(f"{size:>8}  {t_py:>10.3e}s  {'n/a':>12}  {'n/a':>8}")
            continue
        t_cy = best_time(getattr(_kernels_cy, name), *args)
        print(f"{size:>8}  {t_py:>10.3e}s  {t_cy:>10.3e}s  {t_py / t_cy:>7.1f}x")


def l1_args(n):
    rng = np.random.default_rng(n)
    return rng.normal(size=n + 1).cumsum(), 0.5


def pairwise_args(n):
    # A symmetric factor so plenty of index pairs actually match.
    t = np.linspace(0.0, 1.0, n)
    x = (t - 0.5) ** 2
    y = t.copy()
    return x, y, 1e-6, 0.01


def main():
    if _kernels_cy is None:
        print("compiled kernels not available; timing the numpy fallback only")
    bench("l1_weighted_sum", (1024, 4096, 16384, 65536), l1_args)
    bench("multivalued_pairs", (500, 1000, 2000, 4000), pairwise_args)


if __name__ == "__main__":
    main()
