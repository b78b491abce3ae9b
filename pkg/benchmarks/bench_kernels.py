"""Benchmark the numba kernels against the pure-numpy fallback lane.

Runs the two hot kernels (column-pairing evaluation and F_p row reduction) on a
mid-size instance and prints wall-clock timings for each lane.  The fallback
lane is always available; the numba lane is skipped if numba is not installed.

Usage: python benchmarks/bench_kernels.py
"""

import random
import time

import numpy as np

from weylhom import _kernels
from weylhom.combinatorics import Partition, Weight, enumerate_rsst
from weylhom.pairing import PairingContext


def bench_pair_eval(repeats=3):
    mu = Partition((5, 4, 2, 1))
    alpha = Weight((3, 3, 2, 2, 1, 1))
    p = 3
    ctx = PairingContext(mu, alpha, p)
    monos = enumerate_rsst(mu, alpha)
    states = np.array([T.matrix for T in monos], dtype=np.int64)
    print("pair_eval: %d monomials x %d target columns (mu=%s, alpha=%s, p=%d)"
          % (len(monos), len(ctx.letters), mu, alpha, p))

    def run_py():
        for letters in ctx.letters:
            _kernels._pair_eval_py(ctx.heights, letters, states, 6, p)

    def run_nb():
        for letters in ctx.letters:
            _kernels._pair_eval_nb(ctx.heights, letters, states, 6, p,
                                   _kernels._PERMS, _kernels._PERM_CNT,
                                   _kernels._SIGNS)

    lanes = [("python", run_py)]
    if _kernels.HAS_NUMBA:
        run_nb()  # warm up the JIT before timing
        lanes.append(("numba", run_nb))
    results = {}
    for name, fn in lanes:
        best = min(_time(fn) for _ in range(repeats))
        results[name] = best
        print("  %-8s %8.3f s" % (name, best))
    _speedup(results)


def bench_rref(repeats=3, rows=900, cols=700, p=3):
    rng = random.Random(1)
    M = np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)],
                 dtype=np.int64)
    print("rref: %dx%d dense matrix over F_%d" % (rows, cols, p))
    lanes = [("numpy", lambda: _kernels._rref_np(M.copy(), p))]
    if _kernels.HAS_NUMBA:
        _kernels._rref_nb(M[:5, :5].copy(), p)  # warm up the JIT
        lanes.append(("numba", lambda: _kernels._rref_nb(M.copy(), p)))
    results = {}
    for name, fn in lanes:
        best = min(_time(fn) for _ in range(repeats))
        results[name] = best
        print("  %-8s %8.3f s" % (name, best))
    _speedup(results)


def _time(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def _speedup(results):
    if len(results) == 2:
        slow, fast = max(results.values()), min(results.values())
        print("  speedup: %.1fx" % (slow / fast))


if __name__ == "__main__":
    bench_pair_eval()
    bench_rref()
