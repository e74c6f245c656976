"""q-analogue counting and the exhaustive iterators behind every oracle."""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .budget import DEFAULT_CODEWORD_CAP, DEFAULT_SUBSPACE_CAP, check_budget
from .field import GF
from .linalg import Subspace


def gaussian_binomial(n: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^n (exact)."""
    if r < 0 or n < 0:
        raise ValueError("gaussian_binomial needs n, r >= 0")
    if r > n:
        return 0
    num = 1
    den = 1
    for i in range(r):
        num *= q**n - q**i
        den *= q**r - q**i
    quotient, rem = divmod(num, den)
    assert rem == 0
    return quotient


def count_rank_matrices(n: int, m: int, r: int, q: int) -> int:
    """Number of n x m matrices over F_q of rank exactly r."""
    if r < 0:
        raise ValueError("rank must be non-negative")
    if r > min(n, m):
        return 0
    out = gaussian_binomial(n, r, q)
    for i in range(r):
        out *= q**m - q**i
    return out


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def count_subspaces(ell: int, q: int) -> int:
    return sum(gaussian_binomial(ell, d, q) for d in range(ell + 1))


def enumerate_subspaces(ell: int, d: int, F: GF, cap: int | None = DEFAULT_SUBSPACE_CAP):
    """Yield every d-dimensional subspace of F^ell exactly once.

    Order: pivot sets in lexicographic order, then an odometer over the free
    entries of the RREF basis (last free entry fastest).
    """
    check_budget("subspace", gaussian_binomial(ell, d, F.q), cap)
    if d > ell or d < 0:
        return
    for pivots in combinations(range(ell), d):
        pivset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots)
                for j in range(p + 1, ell) if j not in pivset]
        for values in product(range(F.q), repeat=len(free)):
            rows = [[0] * ell for _ in range(d)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(free, values):
                rows[i][j] = x
            yield Subspace(F, ell, tuple(tuple(r) for r in rows))


def all_subspaces(ell: int, F: GF, cap: int | None = DEFAULT_SUBSPACE_CAP):
    """Every subspace of F^ell, by increasing dimension."""
    check_budget("subspace", count_subspaces(ell, F.q), cap)
    for d in range(ell + 1):
        yield from enumerate_subspaces(ell, d, F, cap=None)


# -- codewords ----------------------------------------------------------------

def _combination_table(F: GF, vectors: np.ndarray) -> np.ndarray:
    """All F-linear combinations of the rows of ``vectors`` (odometer order,
    first row's coefficient slowest)."""
    ell = vectors.shape[1]
    table = np.zeros((1, ell), dtype=np.int64)
    for v in vectors:
        multiples = np.array([F.mul_arrays(np.int64(a), v) for a in range(F.q)], dtype=np.int64)
        table = F.add_arrays(table[:, None, :], multiples[None, :, :]).reshape(-1, ell)
    return table


def codeword_batches(C, cap: int | None = DEFAULT_CODEWORD_CAP, chunk: int = 1 << 16):
    """Yield all q^dim codewords of C as arrays of shape (N, n, m).

    The coefficient space is split into a high part (one batch per value) and
    a low part (a precomputed table), so batches are independent and can be
    handed to separate workers.
    """
    F = C.field
    dim = C.dim
    check_budget("codeword", F.q**dim, cap)
    B = C.space.matrix()
    low_count = 0
    while low_count < dim and F.q ** (low_count + 1) <= chunk:
        low_count += 1
    high, low = B[: dim - low_count], B[dim - low_count:]
    low_table = _combination_table(F, low)
    for coeffs in product(range(F.q), repeat=len(high)):
        offset = np.zeros(C.n * C.m, dtype=np.int64)
        for a, v in zip(coeffs, high):
            if a:
                offset = F.add_arrays(offset, F.mul_arrays(np.int64(a), v))
        words = F.add_arrays(low_table, offset[None, :]) if high.size else low_table
        yield words.reshape(-1, C.n, C.m)


def enumerate_codewords(C, cap: int | None = DEFAULT_CODEWORD_CAP):
    """Yield each codeword of C once as an n x m array."""
    for batch in codeword_batches(C, cap=cap):
        yield from batch
