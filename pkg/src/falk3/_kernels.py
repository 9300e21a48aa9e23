"""Integer elimination kernels: numba-jitted loops with a pure-numpy fallback.

Set FALK_NUMBA=0 to force the vectorized numpy path (benchmarks/bench_rank.py
compares the two).  Both paths implement the same pair of routines:

* fraction-free (Bareiss) forward elimination over the integers, guarded
  against int64 overflow -- returns -1 when entries could leave the safe
  range so the caller can redo the run in arbitrary precision;
* Gaussian elimination over the prime field Z/p.
"""

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


# 2 * GUARD**2 < 2**63 keeps the Bareiss update a*piv - b*c inside int64.
GUARD = 2**31 - 1


def numba_enabled() -> bool:
    if not HAVE_NUMBA:
        return False
    return os.environ.get("FALK_NUMBA", "1").lower() not in ("0", "false", "no")


def bareiss_impl():
    return bareiss_rank_jit if numba_enabled() else bareiss_rank_numpy


def modp_impl():
    return modp_rank_jit if numba_enabled() else modp_rank_numpy


@njit(cache=True)
def bareiss_rank_jit(m):  # pragma: no cover - exercised through rank.exact_rank
    """Rank of an int64 matrix by fraction-free elimination; -1 on overflow risk.

    Mutates its argument; callers pass a copy.
    """
    nr, nc = m.shape
    big = 0
    for i in range(nr):
        for j in range(nc):
            v = m[i, j]
            if v < 0:
                v = -v
            if v > big:
                big = v
    rank = 0
    prev = 1
    row = 0
    col = 0
    while row < nr and col < nc:
        if big > GUARD:
            return -1
        piv_row = -1
        for i in range(row, nr):
            if m[i, col] != 0:
                piv_row = i
                break
        if piv_row < 0:
            col += 1
            continue
        if piv_row != row:
            for j in range(nc):
                t = m[row, j]
                m[row, j] = m[piv_row, j]
                m[piv_row, j] = t
        piv = m[row, col]
        big = 0
        for i in range(row + 1, nr):
            f = m[i, col]
            for j in range(col + 1, nc):
                t = (m[i, j] * piv - f * m[row, j]) // prev
                m[i, j] = t
                if t < 0:
                    t = -t
                if t > big:
                    big = t
            m[i, col] = 0
        prev = piv
        rank += 1
        row += 1
        col += 1
    return rank


@njit(cache=True)
def _modpow(base, exp, p):  # pragma: no cover
    r = 1
    b = base % p
    while exp > 0:
        if exp & 1:
            r = (r * b) % p
        b = (b * b) % p
        exp >>= 1
    return r


@njit(cache=True)
def modp_rank_jit(m, p):  # pragma: no cover - exercised through rank.modp_rank
    """Rank over Z/p of an int64 matrix (mutated in place; pass a copy)."""
    nr, nc = m.shape
    for i in range(nr):
        for j in range(nc):
            m[i, j] = m[i, j] % p
    rank = 0
    row = 0
    col = 0
    while row < nr and col < nc:
        piv_row = -1
        for i in range(row, nr):
            if m[i, col] != 0:
                piv_row = i
                break
        if piv_row < 0:
            col += 1
            continue
        if piv_row != row:
            for j in range(nc):
                t = m[row, j]
                m[row, j] = m[piv_row, j]
                m[piv_row, j] = t
        inv = _modpow(m[row, col], p - 2, p)
        for i in range(row + 1, nr):
            f = (m[i, col] * inv) % p
            if f == 0:
                continue
            for j in range(col + 1, nc):
                m[i, j] = (m[i, j] - f * m[row, j]) % p
            m[i, col] = 0
        rank += 1
        row += 1
        col += 1
    return rank


def bareiss_rank_numpy(m):
    """Vectorized fallback for bareiss_rank_jit; same contract."""
    nr, nc = m.shape
    rank = 0
    prev = 1
    row = 0
    col = 0
    while row < nr and col < nc:
        block = m[row:, col:]
        if int(np.abs(block).max()) > GUARD:
            return -1
        nz = np.nonzero(m[row:, col])[0]
        if nz.size == 0:
            col += 1
            continue
        piv_row = row + int(nz[0])
        if piv_row != row:
            m[[row, piv_row]] = m[[piv_row, row]]
        piv = int(m[row, col])
        if row + 1 < nr:
            factors = m[row + 1 :, col].copy()
            m[row + 1 :, col:] = (
                m[row + 1 :, col:] * piv - np.outer(factors, m[row, col:])
            ) // prev
        prev = piv
        rank += 1
        row += 1
        col += 1
    return rank


def modp_rank_numpy(m, p):
    """Vectorized fallback for modp_rank_jit; same contract."""
    m %= p
    nr, nc = m.shape
    rank = 0
    row = 0
    col = 0
    while row < nr and col < nc:
        nz = np.nonzero(m[row:, col])[0]
        if nz.size == 0:
            col += 1
            continue
        piv_row = row + int(nz[0])
        if piv_row != row:
            m[[row, piv_row]] = m[[piv_row, row]]
        inv = pow(int(m[row, col]), p - 2, p)
        if row + 1 < nr:
            factors = (m[row + 1 :, col] * inv) % p
            m[row + 1 :, col:] = (
                m[row + 1 :, col:] - np.outer(factors, m[row, col:])
            ) % p
        rank += 1
        row += 1
        col += 1
    return rank
