"""Time the numba and numpy paths of each hot kernel.

    python benchmarks/bench_kernels.py [--repeat N]

The first numba call per kernel is a warm-up (JIT compile or cache load) and
is excluded.  Outputs of the two paths are compared before timing.
"""
import argparse
import math
import time

import numpy as np

from lorentz_torus import _kernels

CASES = {
    "divisor_pairs(m_max=5000)": lambda b: _kernels.divisor_pairs(5000, backend=b),
    "pell_search(d=181, y<=1e6)": lambda b: _kernels.pell_search(181, 10**6, backend=b),
    "pell_search(d=94, y<=1e6)": lambda b: _kernels.pell_search(94, 10**6, backend=b),
    "orbit_counts(3,-2,-4,3; 1e6 steps)": lambda b: _kernels.orbit_counts(
        (3, -2, -4, 3), math.sqrt(2) - 1, math.pi - 3, 10**6, backend=b)[0],
}


def _same(a, b):
    if isinstance(a, tuple) and a and isinstance(a[0], np.ndarray):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")
    print(f"default backend: {_kernels.BACKEND}")
    print(f"{'kernel':<38}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}")
    for name, case in CASES.items():
        ref = case("numba")  # warm-up
        assert _same(ref, case("numpy")), f"{name}: backends disagree"
        tn = best_of(lambda: case("numba"), args.repeat)
        tp = best_of(lambda: case("numpy"), args.repeat)
        print(f"{name:<38}{tn:>12.4f}{tp:>12.4f}{tp / tn:>9.1f}x")


if __name__ == "__main__":
    main()
