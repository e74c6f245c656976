"""Linear algebra over F_q: RREF, rank, subspaces, the trace pairing.

Matrices are 2-d numpy integer arrays of field indices; the field is passed
alongside.  Subspaces of F_q^l are stored by their canonical reduced row
echelon basis, so equal subspaces compare and hash equal.

Over F_2 rows are packed into Python ints (bit j = coordinate j) and reduced
with XOR.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import GF


# -- row reduction on lists of rows -----------------------------------------

def _pack(row) -> int:
    word = 0
    for j, x in enumerate(row):
        if x:
            word |= 1 << j
    return word


def _unpack(word: int, ncols: int) -> tuple[int, ...]:
    return tuple((word >> j) & 1 for j in range(ncols))


def _rref_gf2_words(words, ncols):
    rows = [w for w in words if w]
    out = []
    pivots = []
    for c in range(ncols):
        bit = 1 << c
        for i, w in enumerate(rows):
            if w & bit:
                piv = rows.pop(i)
                break
        else:
            continue
        rows = [w ^ piv if w & bit else w for w in rows]
        out = [w ^ piv if w & bit else w for w in out]
        out.append(piv)
        pivots.append(c)
        if not rows:
            break
    return out, pivots


def rref_rows(F: GF, rows, ncols: int):
    """Canonical RREF of a list of rows; returns (nonzero rows, pivot columns)."""
    if F.q == 2:
        words, pivots = _rref_gf2_words([_pack(r) for r in rows], ncols)
        return [_unpack(w, ncols) for w in words], pivots
    add, mul, sub, inv = F._add, F._mul, F._sub, F._inv
    work = [list(r) for r in rows if any(r)]
    out = []
    pivots = []
    for c in range(ncols):
        for i, r in enumerate(work):
            if r[c]:
                piv = work.pop(i)
                break
        else:
            continue
        s = inv[piv[c]]
        if s != 1:
            piv = [mul[s][x] for x in piv]

        def reduce(r):
            f = r[c]
            if not f:
                return r
            return [sub[x][mul[f][y]] for x, y in zip(r, piv)]

        work = [r for r in map(reduce, work) if any(r)]
        out = [reduce(r) for r in out]
        out.append(piv)
        pivots.append(c)
        if not work:
            break
    return [tuple(r) for r in out], pivots


def rref(F: GF, M):
    """Reduced row echelon form of M (same shape, zero rows last) and its pivots."""
    M = np.asarray(M, dtype=np.int64)
    rows, pivots = rref_rows(F, M.tolist(), M.shape[1])
    R = np.zeros_like(M)
    if rows:
        R[: len(rows)] = np.array(rows, dtype=np.int64)
    return R, pivots


def rank(F: GF, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref_rows(F, M.tolist(), M.shape[1])[1])


def row_space(F: GF, M) -> "Subspace":
    M = np.asarray(M)
    return Subspace.span(F, M.shape[1], M.tolist())


def col_space(F: GF, M) -> "Subspace":
    M = np.asarray(M)
    return Subspace.span(F, M.shape[0], M.T.tolist())


def trace_pairing(F: GF, M, N) -> int:
    """Tr(M N^t), i.e. the dot product of the row-major vectorizations."""
    M = np.asarray(M)
    N = np.asarray(N)
    if M.shape != N.shape:
        raise ValueError(f"shape mismatch: {M.shape} vs {N.shape}")
    return F.dot(M.ravel().tolist(), N.ravel().tolist())


def is_invertible(F: GF, M) -> bool:
    M = np.asarray(M)
    return M.shape[0] == M.shape[1] and rank(F, M) == M.shape[0]


# -- subspaces ----------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^ambient held by its canonical RREF basis."""

    field: GF
    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, F: GF, ambient: int, vectors) -> "Subspace":
        vectors = [tuple(int(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        rows, _ = rref_rows(F, vectors, ambient)
        return cls(F, ambient, tuple(rows))

    @classmethod
    def zero(cls, F: GF, ambient: int) -> "Subspace":
        return cls(F, ambient, ())

    @classmethod
    def full(cls, F: GF, ambient: int) -> "Subspace":
        return cls.standard(F, ambient, range(ambient))

    @classmethod
    def standard(cls, F: GF, ambient: int, coords) -> "Subspace":
        """Span of the unit vectors e_i for i in coords (0-based)."""
        rows = []
        for i in sorted(set(coords)):
            v = [0] * ambient
            v[i] = 1
            rows.append(tuple(v))
        return cls(F, ambient, tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis]

    def matrix(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, self.ambient), dtype=np.int64)
        return np.array(self.basis, dtype=np.int64)

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError("subspaces live in different ambient spaces")

    def contains(self, v) -> bool:
        v = [int(x) for x in v]
        if len(v) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        F = self.field
        sub, mul = F._sub, F._mul
        for row, p in zip(self.basis, self.pivots):
            f = v[p]
            if f:
                v = [sub[x][mul[f][y]] for x, y in zip(v, row)]
        return not any(v)

    __contains__ = contains

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient, self.basis + other.basis)

    sum = __add__

    def orthogonal(self) -> "Subspace":
        """Orthogonal complement for the standard dot product."""
        F, ell = self.field, self.ambient
        pivots = self.pivots
        pivset = set(pivots)
        vectors = []
        for f in range(ell):
            if f in pivset:
                continue
            v = [0] * ell
            v[f] = 1
            for row, p in zip(self.basis, pivots):
                v[p] = F.neg(row[f])
            vectors.append(v)
        return Subspace.span(F, ell, vectors)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        if self <= other:
            return self
        if other <= self:
            return other
        return (self.orthogonal() + other.orthogonal()).orthogonal()

    __and__ = intersect

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __repr__(self):
        return f"Subspace(F_{self.field.q}^{self.ambient}, basis={[list(r) for r in self.basis]})"


def sum_dim(F: GF, ambient: int, *groups) -> int:
    """Dimension of the span of several lists of vectors."""
    rows = [v for g in groups for v in g]
    return len(rref_rows(F, rows, ambient)[1])


# -- batched rank over many small matrices ------------------------------------

def batch_rank(F: GF, mats) -> np.ndarray:
    """Ranks of a stack of matrices with shape (N, r, c)."""
    A = np.array(mats, dtype=np.int64, copy=True)
    N, r, c = A.shape
    if r > c:
        A = np.ascontiguousarray(A.transpose(0, 2, 1))
        r, c = c, r
    if F.q == 2:
        weights = np.left_shift(np.int64(1), np.arange(c, dtype=np.int64))
        words = (A * weights).sum(axis=2)
        return batch_rank_gf2(words, c)
    ranks = np.zeros(N, dtype=np.int64)
    used = np.zeros((N, r), dtype=bool)
    idx = np.arange(N)
    for col in range(c):
        column = A[:, :, col]
        cand = (column != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        ranks += has
        used[idx[has], piv[has]] = True
        prow = A[idx, piv]                               # (N, c)
        pinv = F.inv_table[A[idx, piv, col]]             # zero where no pivot
        factor = F.mul_arrays(column, pinv[:, None])     # (N, r)
        factor[idx, piv] = 0
        factor[~has] = 0
        A = F.sub_arrays(A, F.mul_arrays(factor[:, :, None], prow[:, None, :]))
    return ranks


def batch_rank_gf2(words, ncols: int) -> np.ndarray:
    """Ranks over F_2 of stacked matrices given as packed rows, shape (N, r)."""
    W = np.array(words, dtype=np.int64, copy=True)
    N, r = W.shape
    ranks = np.zeros(N, dtype=np.int64)
    used = np.zeros((N, r), dtype=bool)
    idx = np.arange(N)
    for col in range(ncols):
        bit = (W >> col) & 1
        cand = (bit == 1) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        ranks += has
        used[idx[has], piv[has]] = True
        prow = np.where(has, W[idx, piv], 0)
        mask = bit.astype(bool)
        mask[idx, piv] = False
        W = np.where(mask, W ^ prow[:, None], W)
    return ranks
