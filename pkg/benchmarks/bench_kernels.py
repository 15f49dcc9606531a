"""Compare the compiled and pure-Python elimination kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Two workloads: dense random integer matrices through ``rref_int``, and the
commutator span of a truncated wreath cocenter built with each backend.
"""

import argparse
import random
import time

from frobw import _kernels_py, linalg
from frobw.builtins import builtin
from frobw.wreath import TruncatedCocenter, WreathAlgebra

try:
    from frobw import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def random_matrix(rng, rows, cols, density=0.3, size=9):
    return [[rng.randint(-size, size) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def with_backend(module, fn):
    saved = (linalg.kernels.insert_row, linalg.kernels.reduce_vector)
    linalg.kernels.insert_row, linalg.kernels.reduce_vector = module.insert_row, module.reduce_vector
    try:
        return fn()
    finally:
        linalg.kernels.insert_row, linalg.kernels.reduce_vector = saved


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return
    rng = random.Random(args.seed)
    print(f"{'workload':<34}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for rows, cols in ((60, 60), (120, 150), (160, 190)):
        M = random_matrix(rng, rows, cols)
        tp, rp = best_of(lambda: _kernels_py.rref_int([list(r) for r in M], cols), args.repeat)
        tc, rc = best_of(lambda: _kernels.rref_int([list(r) for r in M], cols), args.repeat)
        assert rp == rc, "backends disagree"
        print(f"{f'rref_int {rows}x{cols}':<34}{tp:>12.4f}{tc:>12.4f}{tp / tc:>10.2f}")
    for name, D, Dc in (("field", 2, 4), ("dual_numbers", 1, 3)):
        A = builtin(name)

        def run():
            return TruncatedCocenter(WreathAlgebra(A, 2), D, Dc).dimension

        tp, dp = best_of(lambda: with_backend(_kernels_py, run), args.repeat)
        tc, dc = best_of(lambda: with_backend(_kernels, run), args.repeat)
        assert dp == dc, "backends disagree"
        print(f"{f'cocenter {name} n=2 D={D} Dcomm={Dc}':<34}{tp:>12.4f}{tc:>12.4f}{tp / tc:>10.2f}")


if __name__ == "__main__":
    main()
