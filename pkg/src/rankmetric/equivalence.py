"""Isometry equivalence of small codes and the dually-qOAC census.

Linear isometries of F_q^{n x m} are A -> N A M, plus A -> N A^t M when
n = m, with N, M invertible.  Everything here enumerates GL_n(F_q) x
GL_m(F_q) outright, so it is meant for tiny parameters only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .budget import DEFAULT_CODEWORD_CAP, DEFAULT_GROUP_CAP, DEFAULT_SUBSPACE_CAP, BudgetExceeded, check_budget
from .codes import RankMetricCode, is_dually_qoac, mat_support, mat_support_rows
from .combinatorics import enumerate_subspaces, gaussian_binomial, gl_order
from .constructions import DUALLY_QOAC_FORMS, dually_qoac_form, dually_qoac_form_params
from .field import GF
from .invariants import generalized_weights_oracle, rank_distribution_oracle
from .linalg import Subspace, is_invertible, rank


@dataclass(frozen=True, eq=False)
class Isometry:
    N: np.ndarray
    M: np.ndarray
    transpose: bool = False

    def __post_init__(self):
        if self.transpose and self.N.shape != self.M.shape:
            raise ValueError("the transposing isometry needs square matrices")

    def __call__(self, F: GF, A) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        if self.transpose:
            A = A.T
        return F.matmul(F.matmul(self.N, A), self.M)

    def to_json(self) -> dict:
        return {"N": self.N.tolist(), "M": self.M.tolist(), "transpose": self.transpose}

    @classmethod
    def from_json(cls, obj) -> "Isometry":
        return cls(np.array(obj["N"], dtype=np.int64), np.array(obj["M"], dtype=np.int64),
                   bool(obj.get("transpose", False)))

    @classmethod
    def identity(cls, n: int, m: int) -> "Isometry":
        return cls(np.eye(n, dtype=np.int64), np.eye(m, dtype=np.int64))


@lru_cache(maxsize=16)
def general_linear_group(F: GF, n: int) -> np.ndarray:
    """All invertible n x n matrices, shape (|GL_n|, n, n).

    Built row by row, each new row avoiding the span of the previous ones.
    """
    vectors = [tuple((x // F.q**j) % F.q for j in range(n)) for x in range(F.q**n)]
    out = []

    def extend(rows, span):
        if len(rows) == n:
            out.append(rows)
            return
        for v in vectors:
            if not span.contains(v):
                extend(rows + [v], Subspace.span(F, n, rows + [v]))

    extend([], Subspace.zero(F, n))
    assert len(out) == gl_order(n, F.q)
    return np.array(out, dtype=np.int64).reshape(-1, n, n)


def isometry_group_order(F: GF, n: int, m: int) -> int:
    return gl_order(n, F.q) * gl_order(m, F.q) * (2 if n == m else 1)


def apply_isometry(phi: Isometry, C: RankMetricCode) -> RankMetricCode:
    F = C.field
    if phi.N.shape != (C.n, C.n) or phi.M.shape != (C.m, C.m):
        raise ValueError("isometry shape does not match the code")
    if not (is_invertible(F, phi.N) and is_invertible(F, phi.M)):
        raise ValueError("isometry matrices must be invertible")
    images = []
    for B in C.basis_matrices():
        image = phi(F, B)
        assert rank(F, image) == rank(F, B)
        images.append(image)
    return RankMetricCode.from_matrices(F, images, shape=(C.n, C.m))


def random_isometry(F: GF, n: int, m: int, rng) -> Isometry:
    def invertible(k):
        while True:
            A = np.array([[rng.randrange(F.q) for _ in range(k)] for _ in range(k)], dtype=np.int64)
            if is_invertible(F, A):
                return A
    return Isometry(invertible(n), invertible(m), bool(n == m and rng.randrange(2)))


def _membership(F: GF, D: RankMetricCode, vectors: np.ndarray) -> np.ndarray:
    """Row-wise test of vectors (shape (K, nm)) for membership in D."""
    if D.dim == 0:
        return ~vectors.any(axis=1)
    R = D.space.matrix()
    residual = F.sub_arrays(vectors, F.matmul(vectors[:, D.space.pivots], R))
    return ~residual.any(axis=1)


def _same_fingerprint(C: RankMetricCode, D: RankMetricCode, codeword_cap) -> bool:
    try:
        if rank_distribution_oracle(C, codeword_cap) != rank_distribution_oracle(D, codeword_cap):
            return False
    except BudgetExceeded:
        pass
    return generalized_weights_oracle(C) == generalized_weights_oracle(D)


def are_equivalent(C: RankMetricCode, D: RankMetricCode, cap: int | None = DEFAULT_GROUP_CAP,
                   codeword_cap: int | None = DEFAULT_CODEWORD_CAP, fingerprint: bool = True) -> Isometry | None:
    """An isometry phi with phi(C) = D, or None when there is none."""
    F = C.field
    if (C.n, C.m) != (D.n, D.m) or F != D.field:
        raise ValueError("codes live in different matrix spaces")
    if C.dim != D.dim:
        return None
    if C == D:
        return Isometry.identity(C.n, C.m)
    if fingerprint and not _same_fingerprint(C, D, codeword_cap):
        return None
    n, m = C.n, C.m
    check_budget("isometry group", isometry_group_order(F, n, m), cap)
    GLn = general_linear_group(F, n)
    GLm = general_linear_group(F, m)
    basis = np.array(C.basis_matrices(), dtype=np.int64)
    for transpose in ((False, True) if n == m else (False,)):
        src = basis.transpose(0, 2, 1) if transpose else basis
        for N in GLn:
            left = F.matmul(N, src)                               # (d, n, m)
            images = F.matmul(left[None, :, :, :], GLm[:, None, :, :])  # (|GLm|, d, n, m)
            ok = _membership(F, D, images.reshape(-1, n * m)).reshape(len(GLm), -1).all(axis=1)
            hits = np.flatnonzero(ok)
            if hits.size:
                return Isometry(N.copy(), GLm[hits[0]].copy(), transpose)
    return None


def isometry_orbit(C: RankMetricCode, cap: int | None = DEFAULT_GROUP_CAP) -> dict[Subspace, Isometry]:
    """Every code equivalent to C, each mapped to one isometry producing it."""
    F, n, m = C.field, C.n, C.m
    check_budget("isometry group", isometry_group_order(F, n, m), cap)
    GLn = general_linear_group(F, n)
    GLm = general_linear_group(F, m)
    basis = np.array(C.basis_matrices(), dtype=np.int64)
    orbit = {}
    for transpose in ((False, True) if n == m else (False,)):
        src = basis.transpose(0, 2, 1) if transpose else basis
        for N in GLn:
            left = F.matmul(N, src)
            images = F.matmul(left[None], GLm[:, None])
            for M, image in zip(GLm, images):
                space = Subspace.span(F, n * m, image.reshape(len(basis), -1).tolist())
                if space not in orbit:
                    orbit[space] = Isometry(N.copy(), M.copy(), transpose)
    return orbit


# -- containment in sums of support spaces --------------------------------------------

def contained_in_mat_sum(C: RankMetricCode, s: int, k: int,
                         cap: int | None = DEFAULT_SUBSPACE_CAP) -> tuple[Subspace, Subspace] | None:
    """Find U (dim s in F^n) and W (dim k in F^m) with C inside Mat(U) + Mat(W)^t.

    No isometries are applied: this asks about C exactly as stored.
    """
    F, n, m = C.field, C.n, C.m
    if not (0 <= s <= n and 0 <= k <= m):
        return None
    check_budget("subspace pair", gaussian_binomial(n, s, F.q) * gaussian_binomial(m, k, F.q), cap)
    row_parts = [(W, mat_support_rows(W, n).space) for W in enumerate_subspaces(m, k, F, cap=None)]
    for U in enumerate_subspaces(n, s, F, cap=None):
        col_part = mat_support(U, m).space
        for W, row_part in row_parts:
            total = col_part + row_part
            if all(total.contains(v) for v in C.space.basis):
                return U, W
    return None


# -- census of dually qOACs -------------------------------------------------------------

@dataclass
class AuditReport:
    q: int
    n: int
    m: int
    dim: int
    alpha: int
    rho: int
    forms: list[str]
    scanned: int = 0
    dually_qoac: int = 0
    classified: int = 0
    per_form: dict = dc_field(default_factory=dict)
    unclassified: list = dc_field(default_factory=list)
    witnesses: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unclassified and self.classified == self.dually_qoac

    def to_json(self) -> dict:
        return {
            "q": self.q, "n": self.n, "m": self.m, "dim": self.dim,
            "alpha": self.alpha, "rho": self.rho, "forms": self.forms,
            "scanned": self.scanned, "dually_qoac": self.dually_qoac,
            "classified": self.classified, "per_form": self.per_form, "ok": self.ok,
            "unclassified": [[list(v) for v in C.space.basis] for C in self.unclassified],
            "witnesses": [{"code": [list(v) for v in C.space.basis], "form": f, "isometry": phi.to_json()}
                          for C, f, phi in self.witnesses],
        }


def audit_dually_qoac_classification(F: GF, n: int, m: int, dim: int,
                                     subspace_cap: int | None = DEFAULT_SUBSPACE_CAP,
                                     group_cap: int | None = DEFAULT_GROUP_CAP,
                                     dump_path=None) -> AuditReport:
    """Scan every dim-dimensional code in F^{n x m}, keep the dually qOACs and
    match each against the canonical forms up to isometry.

    Any dually qOAC that matches no form is listed in ``unclassified`` (and
    written to ``dump_path`` when given).  Witness isometries map the form
    onto the code.
    """
    if n > m:
        raise ValueError("the census expects n <= m; transpose the problem")
    check_budget("subspace", gaussian_binomial(n * m, dim, F.q), subspace_cap)
    alpha, rho = divmod(dim, m)
    forms = [f for f in DUALLY_QOAC_FORMS
             if rho and alpha < n and dually_qoac_form_params(n, m, alpha, rho, f) is not None]
    report = AuditReport(F.q, n, m, dim, alpha, rho, forms, per_form={f: 0 for f in forms})
    orbits = {f: isometry_orbit(dually_qoac_form(F, n, m, alpha, rho, f), group_cap) for f in forms}
    canon = {f: dually_qoac_form(F, n, m, alpha, rho, f, validate_cap=None) for f in forms}

    for V in enumerate_subspaces(n * m, dim, F, cap=None):
        report.scanned += 1
        C = RankMetricCode(n, m, V)
        if not is_dually_qoac(C):
            continue
        report.dually_qoac += 1
        matched = [f for f in forms if V in orbits[f]]
        for f in matched:
            report.per_form[f] += 1
        if not matched:
            report.unclassified.append(C)
            continue
        f = matched[0]
        phi = orbits[f][V]
        assert apply_isometry(phi, canon[f]) == C
        report.classified += 1
        report.witnesses.append((C, f, phi))

    if dump_path is not None and report.unclassified:
        with open(dump_path, "w") as fh:
            json.dump(report.to_json(), fh, indent=1)
    return report
