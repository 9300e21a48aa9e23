"""Time the elimination kernels: numba jit vs pure numpy vs big-integer.

Run as `python benchmarks/bench_rank.py`.  The matrices are the degree-3
ideal rows of fully doubled complete graphs, the densest inputs the library
produces at small vertex counts.  The big-integer reference only runs on
the smallest matrix; it exists for exactness, not speed.
"""

import time

import numpy as np

from falk3 import _kernels, complete_doubled
from falk3.algebra import ideal3_rows, rows_to_matrix
from falk3.rank import SCREEN_PRIME, bigint_rank


def timed(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    if _kernels.HAVE_NUMBA:
        # compile outside the timed region
        _kernels.bareiss_rank_jit(np.eye(2, dtype=np.int64))
        _kernels.modp_rank_jit(np.eye(2, dtype=np.int64), SCREEN_PRIME)

    print(f"{'matrix':>14} {'shape':>12} {'rank':>6} "
          f"{'jit':>12} {'numpy':>12} {'bigint':>12} {'mod-p jit':>12}")
    for ell, run_bigint in ((4, True), (5, False)):
        g = complete_doubled(ell, loops=(1,))
        m = rows_to_matrix(ideal3_rows(g))
        label = f"doubled K{ell}+o"

        if _kernels.HAVE_NUMBA:
            r_jit, t_jit = timed(lambda: _kernels.bareiss_rank_jit(m.copy()))
            _, t_modp = timed(lambda: _kernels.modp_rank_jit(m.copy(), SCREEN_PRIME))
            jit_s, modp_s = f"{t_jit * 1e3:10.2f}ms", f"{t_modp * 1e3:10.2f}ms"
        else:
            r_jit, jit_s, modp_s = None, "n/a", "n/a"

        r_np, t_np = timed(lambda: _kernels.bareiss_rank_numpy(m.copy()), repeats=1)
        if run_bigint:
            r_big, t_big = timed(lambda: bigint_rank(m.tolist()), repeats=1)
            big_s = f"{t_big * 1e3:10.2f}ms"
        else:
            r_big, big_s = None, "skipped"

        ranks = {r for r in (r_jit, r_np, r_big) if r is not None}
        assert len(ranks) == 1, f"rank disagreement: {ranks}"
        print(f"{label:>14} {str(m.shape):>12} {r_np:>6} "
              f"{jit_s:>12} {t_np * 1e3:10.2f}ms {big_s:>12} {modp_s:>12}")


if __name__ == "__main__":
    main()
