"""Time the compiled loop kernels against the numpy ones.

    python3 benchmarks/bench_kernels.py [--size N] [--repeat R]

Without numba the loop kernels run as plain Python, so only small sizes are
practical in that case.
"""

import argparse
import time

import numpy as np

from sicigamma import kernels
from sicigamma._accel import HAVE_NUMBA


def best_of(fn, arg, repeat):
    fn(*arg)  # warm up (and compile)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*arg)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(1)
    x = np.exp(rng.uniform(np.log(1e-3), np.log(1e4), args.size))
    unit = rng.uniform(0.0, 1.0, args.size)
    terms = 1.0 / np.arange(1, args.size + 1, dtype=np.float64) ** 2
    cases = [
        ("sici_aux", (x,)),
        ("digamma", (x,)),
        ("log_gamma", (x,)),
        ("dilog", (unit,)),
        ("compensated_cumsum", (terms,)),
        ("barnes_product_sum", (0.5, args.size)),
    ]

    print(f"numba available: {HAVE_NUMBA}, active backend: {kernels.BACKEND}, n = {args.size}")
    print(f"{'kernel':<20} {'loop ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, arg in cases:
        t_loop = best_of(getattr(kernels, name + "_loop"), arg, args.repeat)
        t_np = best_of(getattr(kernels, name + "_numpy"), arg, args.repeat)
        print(f"{name:<20} {1e3 * t_loop:>10.2f} {1e3 * t_np:>10.2f} {t_np / t_loop:>8.1f}")


if __name__ == "__main__":
    main()
