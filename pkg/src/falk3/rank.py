"""Exact matrix rank over the rationals, with an optional prime-field screen.

The fast path runs fraction-free integer elimination in int64 (see _kernels);
when the pivot-growth guard trips it redoes the computation over Python's
arbitrary-precision integers, so the result is always the exact rank.

FALK_RANK_BACKEND selects the strategy:

* "exact" (default): int64 elimination with the big-integer fallback;
* "screened": a cheap elimination mod SCREEN_PRIME runs first.  The screen
  can only undershoot the rational rank, so when it reaches min(rows, cols)
  the exact run is skipped; otherwise the exact path runs and the screen is
  checked against it.  Results are identical to "exact" by construction.
"""

import os

import numpy as np

from . import _kernels
from .errors import RankMismatch

# Prime modulus for the screen; SCREEN_PRIME**2 still fits in int64.
SCREEN_PRIME = 2_147_483_647

_BACKENDS = ("exact", "screened")


def _as_matrix(m) -> np.ndarray:
    a = np.array(m, dtype=np.int64, copy=True)
    if a.ndim != 2:
        if a.size == 0:
            return a.reshape(0, 0)
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def bigint_rank(rows) -> int:
    """Fraction-free elimination over Python ints; exact for any integer matrix."""
    m = [[int(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(nc):
        if row == nr:
            break
        piv_row = next((i for i in range(row, nr) if m[i][col]), None)
        if piv_row is None:
            continue
        m[row], m[piv_row] = m[piv_row], m[row]
        piv = m[row][col]
        mr = m[row]
        for i in range(row + 1, nr):
            mi = m[i]
            f = mi[col]
            for j in range(col + 1, nc):
                mi[j] = (mi[j] * piv - f * mr[j]) // prev
            mi[col] = 0
        prev = piv
        rank += 1
        row += 1
    return rank


def modp_rank(m, p: int = SCREEN_PRIME) -> int:
    """Rank over Z/p; never exceeds the rank over the rationals."""
    a = _as_matrix(m)
    if a.size == 0:
        return 0
    return int(_kernels.modp_impl()(a, p))


def exact_rank(m, backend: str | None = None) -> int:
    """Rank over the rationals.  `backend` overrides FALK_RANK_BACKEND."""
    a = _as_matrix(m)
    if a.size == 0:
        return 0
    mode = backend or os.environ.get("FALK_RANK_BACKEND", "exact")
    if mode not in _BACKENDS:
        raise ValueError(f"unknown rank backend {mode!r}, expected one of {_BACKENDS}")
    screen = None
    if mode == "screened":
        screen = modp_rank(a)
        if screen == min(a.shape):
            return screen
    rank = int(_kernels.bareiss_impl()(a.copy()))
    if rank < 0:  # pivot growth left the int64-safe range
        rank = bigint_rank(a.tolist())
    if screen is not None and screen > rank:
        raise RankMismatch(
            f"mod-{SCREEN_PRIME} screen rank {screen} exceeds exact rank {rank}"
        )
    return rank


def warmup() -> None:
    """Run both kernels once on a tiny matrix (absorbs numba JIT compilation)."""
    m = np.eye(2, dtype=np.int64)
    exact_rank(m, backend="exact")
    modp_rank(m)
