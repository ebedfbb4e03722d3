#!/usr/bin/env python3
"""Benchmark the compiled solver core against the pure-Python fallback.

Times the three kernels on seeded instances and prints a speedup table.
Values are cross-checked for equality between lanes on every run.

Usage:
    python benchmarks/bench_backends.py [--repeats 3] [--large]
"""

from __future__ import annotations

import argparse
import math
import random
import time

from toursplit import _core_py

try:
    from toursplit import _core
except ImportError:
    _core = None


def flat_distances(points) -> list[float]:
    return [math.hypot(a[0] - b[0], a[1] - b[1]) for a in points for b in points]


def make_instance(seed: int, n: int) -> list[tuple[float, float]]:
    rng = random.Random(seed)
    return [(rng.random(), rng.random()) for _ in range(n)]


def best_time(fn, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run_case(label: str, pure_fn, fast_fn, repeats: int) -> None:
    t_pure = best_time(pure_fn, repeats)
    if fast_fn is None:
        print(f"{label:<34} {t_pure:>10.4f}s {'-':>10} {'-':>8}")
        return
    t_fast = best_time(fast_fn, repeats)
    speedup = t_pure / t_fast if t_fast > 0 else math.inf
    print(f"{label:<34} {t_pure:>10.4f}s {t_fast:>9.4f}s {speedup:>7.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3, help="timing repeats per case")
    parser.add_argument(
        "--large",
        action="store_true",
        help="include n=15 tours (several seconds on the pure lane)",
    )
    args = parser.parse_args()

    if _core is None:
        print("compiled core not built (python setup.py build_ext --inplace); timing pure lane only\n")

    header = f"{'kernel / size':<34} {'pure':>11} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    tour_sizes = [10, 12, 13] + ([15] if args.large else [])
    for n in tour_sizes:
        dist = flat_distances(make_instance(7, n))
        expected = _core_py.shortest_cycle(dist, n) if n <= 13 else None
        if _core is not None and expected is not None:
            assert _core.shortest_cycle(dist, n) == expected
        run_case(
            f"shortest_cycle            n={n}",
            lambda d=dist, m=n: _core_py.shortest_cycle(d, m),
            (lambda d=dist, m=n: _core.shortest_cycle(d, m)) if _core else None,
            args.repeats,
        )

    for n in (10, 12, 13):
        dist = flat_distances(make_instance(11, n))
        if _core is not None:
            assert _core.cycle_lengths_by_subset(dist, n) == _core_py.cycle_lengths_by_subset(dist, n)
        run_case(
            f"cycle_lengths_by_subset   n={n}",
            lambda d=dist, m=n: _core_py.cycle_lengths_by_subset(d, m),
            (lambda d=dist, m=n: _core.cycle_lengths_by_subset(d, m)) if _core else None,
            args.repeats,
        )

    for n, k in ((10, 5), (11, 4), (12, 3)):
        dist = flat_distances(make_instance(13, n))
        table = _core_py.cycle_lengths_by_subset(dist, n)
        if _core is not None:
            assert _core.min_max_partition(table, n, k) == _core_py.min_max_partition(table, n, k)
        run_case(
            f"min_max_partition         n={n} k={k}",
            lambda t=table, m=n, kk=k: _core_py.min_max_partition(t, m, kk),
            (lambda t=table, m=n, kk=k: _core.min_max_partition(t, m, kk)) if _core else None,
            args.repeats,
        )


if __name__ == "__main__":
    main()
