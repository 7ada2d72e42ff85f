"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--degree 8] [--repeat 3]

Each row times one kernel over the same workload with both backends.
"""
import argparse
import random
import time
from itertools import permutations

from slimcount import _pykernels

try:
    from slimcount import _ckernels
except ImportError:
    _ckernels = None


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads(degree, seed=0):
    perms = list(permutations(range(1, degree + 1)))
    rng = random.Random(seed)
    grids = []
    for _ in range(200):
        h = rng.randint(10, 30)
        img = list(range(1, h + 1))
        rng.shuffle(img)
        grids.append((h, list(range(1, h + 1)), img))
    return {
        "inversions": lambda k: [k.inversions(p) for p in perms],
        "contains_321": lambda k: [k.contains_321(p) for p in perms],
        "segment_cuts": lambda k: [k.segment_cuts(p) for p in perms],
        "inverse": lambda k: [k.inverse(p) for p in perms],
        "grid_blocks": lambda k: [k.grid_blocks(h, h, r, c) for h, r, c in grids],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degree", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels are not built; only the Python timings are shown")
    print(f"{'kernel':<14}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, work in workloads(args.degree).items():
        py = best_of(args.repeat, lambda: work(_pykernels))
        if _ckernels is None:
            print(f"{name:<14}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        if work(_pykernels) != work(_ckernels):
            raise SystemExit(f"backends disagree on {name}")
        cy = best_of(args.repeat, lambda: work(_ckernels))
        print(f"{name:<14}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
