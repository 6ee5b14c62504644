#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Runs the same workloads through both kernel modules and prints a
comparison table.  Invoke from the repository root:

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

import numpy as np

from cogroups import _kernels_np
from cogroups.constructions import build

try:
    from cogroups import _kernels_numba
except ImportError:
    _kernels_numba = None


def _inverses(gens):
    return np.stack([np.argsort(g) for g in gens]).astype(np.int32)


def workloads():
    s7 = build("S7")
    l227 = build("PSL(2,27)")
    l216 = build("PSL(2,16)")
    s6 = build("S6")
    s6_rows = s6.element_matrix()
    s6_mul = _kernels_np.mul_table(s6_rows)
    cyclic_seeds = [np.array([i], dtype=np.int64) for i in range(1, 720, 11)]

    yield (
        "closure_rows S7 (5040 x 7)",
        lambda k: k.closure_rows(s7.generator_matrix(), 5040),
    )
    yield (
        "row_orders L2(27) (9828 x 28)",
        lambda k: k.row_orders(l227.element_matrix()),
    )
    yield (
        "conj_partition L2(16) (4080 x 17)",
        lambda k: k.conj_partition(
            l216.element_matrix(),
            l216.generator_matrix(),
            _inverses(l216.generator_matrix()),
        ),
    )
    yield ("mul_table S6 (720 x 720)", lambda k: k.mul_table(s6_rows))
    yield (
        "closure_idx sweep S6 (66 closures)",
        lambda k: [k.closure_idx(s6_mul, seed, 0) for seed in cyclic_seeds],
    )


def time_kernel(fn, kernels, repeat):
    fn(kernels)  # warm up (and trigger JIT compilation)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernels)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels_numba is None:
        print("numba unavailable; nothing to compare")
        return

    print(f"{'workload':<38}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    print("-" * 72)
    ratios = []
    for name, fn in workloads():
        t_nb = time_kernel(fn, _kernels_numba, args.repeat)
        t_np = time_kernel(fn, _kernels_np, args.repeat)
        ratios.append(t_np / t_nb)
        print(
            f"{name:<38}{t_nb * 1e3:>10.2f}ms{t_np * 1e3:>10.2f}ms"
            f"{t_np / t_nb:>9.1f}x"
        )
    print("-" * 72)
    print(f"geometric-mean speedup: {np.exp(np.mean(np.log(ratios))):.1f}x")


if __name__ == "__main__":
    main()
