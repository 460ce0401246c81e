#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernel against its pure-Python twin.

Times full eigendecompositions of random symmetric matrices at the sizes
the library actually uses (4x4 dominates; sector oracles go up to 48x48)
and reports the per-solve cost and speedup.  Both kernels run the same
arithmetic, so results are checked to be bit-identical along the way.

Usage: python benchmarks/bench_eig.py [--repeats N]
"""

import argparse
import time

import numpy as np

from jcpair import _jacobi_py
from jcpair.linalg import MAX_SWEEPS, REL_TOL

try:
    from jcpair import _jacobi as _compiled
except ImportError:
    _compiled = None

SIZES = (4, 8, 16, 32, 48)


def make_inputs(n, count, rng):
    matrices = []
    for _ in range(count):
        m = rng.normal(size=(n, n))
        matrices.append(0.5 * (m + m.T))
    return matrices


def time_kernel(kernel, matrices):
    outputs = []
    start = time.perf_counter()
    for m in matrices:
        a = m.copy()
        v = np.eye(m.shape[0])
        sweeps = kernel.jacobi_cycle(a, v, REL_TOL, MAX_SWEEPS)
        outputs.append((a, v, sweeps))
    elapsed = time.perf_counter() - start
    return elapsed, outputs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=200, help="solves per size")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    print(f"{'n':>4} {'python (us)':>14} {'compiled (us)':>14} {'speedup':>8}")
    for n in SIZES:
        matrices = make_inputs(n, args.repeats, rng)
        t_py, out_py = time_kernel(_jacobi_py, matrices)
        per_py = 1e6 * t_py / args.repeats
        if _compiled is None:
            print(f"{n:>4} {per_py:>14.1f} {'unavailable':>14} {'-':>8}")
            continue
        t_c, out_c = time_kernel(_compiled, matrices)
        per_c = 1e6 * t_c / args.repeats
        for (a1, v1, s1), (a2, v2, s2) in zip(out_py, out_c):
            assert s1 == s2
            assert np.array_equal(a1, a2) and np.array_equal(v1, v2), "kernels diverged"
        print(f"{n:>4} {per_py:>14.1f} {per_c:>14.1f} {t_py / t_c:>7.1f}x")
    if _compiled is None:
        print("compiled kernel not built; run: python setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
