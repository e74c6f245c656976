"""Rank-metric codes: F_q-linear spaces of n x m matrices.

A code is stored as a :class:`~rankmetric.linalg.Subspace` of F_q^{nm}
using the row-major vectorization, entry (i, j) at coordinate ``i*m + j``.
With this convention the trace pairing Tr(M N^t) is the ordinary dot
product, so the dual code is the orthogonal complement of the stored space.

Predicates that depend on "the larger side" use ``max(n, m)``, so a code
and its transpose get the same answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import numpy as np

from .budget import DEFAULT_CODEWORD_CAP
from .combinatorics import codeword_batches
from .field import GF
from .linalg import Subspace, batch_rank, rank, sum_dim


@dataclass(frozen=True)
class RankMetricCode:
    n: int
    m: int
    space: Subspace

    def __post_init__(self):
        if self.space.ambient != self.n * self.m:
            raise ValueError("code space does not match the matrix shape")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_matrices(cls, F: GF, matrices, shape=None) -> "RankMetricCode":
        mats = [np.asarray(M, dtype=np.int64) for M in matrices]
        if not mats:
            if shape is None:
                raise ValueError("an empty generator list needs an explicit shape")
            n, m = shape
        else:
            n, m = mats[0].shape if shape is None else shape
        for M in mats:
            if M.shape != (n, m):
                raise ValueError(f"matrix of shape {M.shape} in a {n}x{m} code")
            if M.size and (M.min() < 0 or M.max() >= F.q):
                raise ValueError(f"entries must be field indices in [0, {F.q})")
        return cls(n, m, Subspace.span(F, n * m, [M.ravel().tolist() for M in mats]))

    @classmethod
    def zero(cls, F: GF, n: int, m: int) -> "RankMetricCode":
        return cls(n, m, Subspace.zero(F, n * m))

    @classmethod
    def full(cls, F: GF, n: int, m: int) -> "RankMetricCode":
        return cls(n, m, Subspace.full(F, n * m))

    # -- basic structure ---------------------------------------------------

    @property
    def field(self) -> GF:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def big_side(self) -> int:
        return max(self.n, self.m)

    @property
    def small_side(self) -> int:
        return min(self.n, self.m)

    def basis_matrices(self) -> list[np.ndarray]:
        return [np.array(v, dtype=np.int64).reshape(self.n, self.m) for v in self.space.basis]

    def __contains__(self, M) -> bool:
        M = np.asarray(M)
        if M.shape != (self.n, self.m):
            return False
        return self.space.contains(M.ravel().tolist())

    def _check(self, other: "RankMetricCode"):
        if (self.n, self.m) != (other.n, other.m) or self.field != other.field:
            raise ValueError("codes live in different matrix spaces")

    def __add__(self, other: "RankMetricCode") -> "RankMetricCode":
        self._check(other)
        return RankMetricCode(self.n, self.m, self.space + other.space)

    def __and__(self, other: "RankMetricCode") -> "RankMetricCode":
        self._check(other)
        return RankMetricCode(self.n, self.m, self.space & other.space)

    def __le__(self, other: "RankMetricCode") -> bool:
        self._check(other)
        return self.space <= other.space

    def dual(self) -> "RankMetricCode":
        """Orthogonal complement for (M, N) -> Tr(M N^t)."""
        return RankMetricCode(self.n, self.m, self.space.orthogonal())

    def transpose(self) -> "RankMetricCode":
        return RankMetricCode.from_matrices(
            self.field, [M.T for M in self.basis_matrices()], shape=(self.m, self.n))

    def intersection_dim(self, other: "RankMetricCode") -> int:
        self._check(other)
        return self.dim + other.dim - sum_dim(
            self.field, self.n * self.m, self.space.basis, other.space.basis)

    def __repr__(self):
        return f"RankMetricCode(F_{self.field.q}, {self.n}x{self.m}, dim={self.dim})"


def code_from_matrices(F: GF, matrices, shape=None) -> RankMetricCode:
    return RankMetricCode.from_matrices(F, matrices, shape)


# -- support spaces -------------------------------------------------------------

def mat_support(V: Subspace, m: int) -> RankMetricCode:
    """Mat(V): all n x m matrices whose column space lies in V (n = V.ambient)."""
    n = V.ambient
    mats = []
    for v in V.basis:
        for j in range(m):
            M = np.zeros((n, m), dtype=np.int64)
            M[:, j] = v
            mats.append(M)
    return RankMetricCode.from_matrices(V.field, mats, shape=(n, m))


def mat_support_rows(U: Subspace, n: int) -> RankMetricCode:
    """Mat(U)^t: all n x m matrices whose row space lies in U (m = U.ambient)."""
    m = U.ambient
    mats = []
    for u in U.basis:
        for i in range(n):
            M = np.zeros((n, m), dtype=np.int64)
            M[i, :] = u
            mats.append(M)
    return RankMetricCode.from_matrices(U.field, mats, shape=(n, m))


def subcode_supported(C: RankMetricCode, V: Subspace) -> RankMetricCode:
    """C(V) = C intersected with Mat(V)."""
    if V.ambient != C.n:
        raise ValueError("support space must live in F_q^n")
    return C & mat_support(V, C.m)


def subcode_supported_rows(C: RankMetricCode, U: Subspace) -> RankMetricCode:
    if U.ambient != C.m:
        raise ValueError("row support space must live in F_q^m")
    return C & mat_support_rows(U, C.n)


# -- rank statistics by enumeration ------------------------------------------------

def support_rank_bound(C: RankMetricCode) -> int:
    """Upper bound on every codeword rank: the dimensions of the sums of all
    column spaces and of all row spaces of a basis."""
    if C.dim == 0:
        return 0
    mats = C.basis_matrices()
    cols = np.concatenate(mats, axis=1)
    rows = np.concatenate(mats, axis=0)
    return min(rank(C.field, cols), rank(C.field, rows))


def codeword_rank_batches(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP):
    for batch in codeword_batches(C, cap=cap):
        yield batch_rank(C.field, batch)


def maxrk(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP) -> int:
    """Largest rank of a codeword, by enumeration with early exit."""
    bound = support_rank_bound(C)
    best = 0
    if bound == 0:
        return 0
    for ranks in codeword_rank_batches(C, cap):
        best = max(best, int(ranks.max()))
        if best >= bound:
            break
    return best


def min_distance(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP) -> int:
    """Least rank of a nonzero codeword."""
    if C.dim == 0:
        raise ValueError("the zero code has no minimum distance")
    best = C.small_side
    for ranks in codeword_rank_batches(C, cap):
        nonzero = ranks[ranks > 0]
        if nonzero.size:
            best = min(best, int(nonzero.min()))
        if best == 1:
            break
    return best


# -- predicates ------------------------------------------------------------------

def is_optimal_anticode(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP, *, _maxrk=None) -> bool:
    r = maxrk(C, cap) if _maxrk is None else _maxrk
    return C.dim == C.big_side * r


def is_qoac(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP, *, _maxrk=None) -> bool:
    m = C.big_side
    if C.dim % m == 0:
        return False
    r = maxrk(C, cap) if _maxrk is None else _maxrk
    return r == ceil(C.dim / m)


class InconsistentResult(AssertionError):
    """Two independent computations of the same quantity disagreed."""


def is_dually_qoac(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP) -> bool:
    """Both C and its dual are qOACs.

    Also evaluated through the maxrank-sum identity (sum of the maximum ranks
    of C and its dual equals the small side plus one); a disagreement raises
    :class:`InconsistentResult`.
    """
    D = C.dual()
    r, rd = maxrk(C, cap), maxrk(D, cap)
    direct = is_qoac(C, _maxrk=r) and is_qoac(D, _maxrk=rd)
    via_sum = r + rd == C.small_side + 1
    if direct != via_sum:
        raise InconsistentResult(f"dually-qOAC tests disagree on {C!r}: {direct} vs {via_sum}")
    return direct


@dataclass
class CodeReport:
    dim: int
    maxrk: int
    min_dist: int | None
    is_optimal_anticode: bool
    is_qoac: bool
    is_dually_qoac: bool
    singleton_slack: int | None
    anticode_slack: int
    dual_maxrk: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def analyze(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP) -> CodeReport:
    m, n = C.big_side, C.small_side
    r = maxrk(C, cap)
    rd = maxrk(C.dual(), cap)
    d = min_distance(C, cap) if C.dim else None
    report = CodeReport(
        dim=C.dim,
        maxrk=r,
        min_dist=d,
        is_optimal_anticode=is_optimal_anticode(C, _maxrk=r),
        is_qoac=is_qoac(C, _maxrk=r),
        is_dually_qoac=is_dually_qoac(C, cap),
        singleton_slack=None if d is None else m * (n - d + 1) - C.dim,
        anticode_slack=m * r - C.dim,
        dual_maxrk=rd,
    )
    assert report.anticode_slack >= 0
    assert report.singleton_slack is None or report.singleton_slack >= 0
    return report
