"""Time the compiled kernels against their pure-numpy twins.

Run from the repository root:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --repeats 7 --sizes 7,5 8,3

The first compiled call is excluded (jit warmup); reported numbers are the
best of the repeats, which is the usual way to damp scheduler noise.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from sierham import kernels


def best_of(fn, args, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_pair(label, compiled, plain, args, repeats):
    compiled(*args)  # warmup: trigger compilation before timing
    t_nb = best_of(compiled, args, repeats)
    t_np = best_of(plain, args, repeats)
    ratio = t_np / t_nb if t_nb > 0 else float("inf")
    print(f"{label:<28} numba {t_nb * 1e3:9.3f} ms   numpy {t_np * 1e3:9.3f} ms   numpy/numba {ratio:6.2f}x")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument(
        "--sizes",
        nargs="*",
        default=["7,5", "8,3", "6,7"],
        metavar="N,M",
        help="graph sizes to generate, as comma pairs",
    )
    args = ap.parse_args()

    if not kernels.HAS_NUMBA:
        print("numba unavailable: the compiled column runs plain python")

    for pair in args.sizes:
        n, m = (int(x) for x in pair.split(","))
        print(f"-- n={n} m={m} ({m**n} vertices, {(m ** (n + 1) - m) // 2} sierpinski edges)")
        bench_pair(
            "sierpinski_edges",
            kernels._sierpinski_edges_nb,
            kernels._sierpinski_edges_np,
            (n, m),
            args.repeats,
        )
        bench_pair(
            "hamming_edges",
            kernels._hamming_edges_nb,
            kernels._hamming_edges_np,
            (n, m),
            args.repeats,
        )
        bench_pair(
            "single_twist_edges",
            kernels._single_twist_edges_nb,
            kernels._single_twist_edges_np,
            (n, m),
            args.repeats,
        )
        rng = np.random.default_rng(0)
        a = rng.integers(0, m**n, size=500_000)
        b = rng.integers(0, m**n, size=500_000)
        a = np.ascontiguousarray(a, np.int64)
        b = np.ascontiguousarray(b, np.int64)
        bench_pair(
            "digit_diff_counts (500k)",
            kernels._digit_diff_counts_nb,
            kernels._digit_diff_counts_np,
            (a, b, n, m),
            args.repeats,
        )


if __name__ == "__main__":
    main()
