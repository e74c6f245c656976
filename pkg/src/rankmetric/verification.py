"""Parameter sweeps comparing closed forms against brute-force oracles.

Each theorem id maps to a point generator and a checker returning the
expected (closed form) and observed (oracle) values as strings.  A point
whose enumeration does not fit the caps is reported as SKIPPED.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from .budget import DEFAULT_CODEWORD_CAP, DEFAULT_GROUP_CAP, DEFAULT_SUBSPACE_CAP, BudgetExceeded, check_budget
from .codes import RankMetricCode, is_optimal_anticode, is_qoac, maxrk
from .combinatorics import all_subspaces, count_subspaces
from .constructions import block_code, block_code_is_qoac
from .equivalence import audit_dually_qoac_classification
from .field import field_from_order
from .invariants import (generalized_weights_closed_form, generalized_weights_oracle, rank_distribution_closed_form,
                         rank_distribution_oracle, rho_c, rho_c_closed_form, rho_r, rho_r_closed_form,
                         verify_qpolymatroid_axioms)

MATCH, MISMATCH, SKIPPED = "MATCH", "MISMATCH", "SKIPPED"

THEOREM_ALIASES = {
    "maxrank-sum": "prop2.4",
    "census": "thm2.5-audit",
    "block-qoac": "prop2.11",
    "weights": "thm3.3",
    "rank-distribution": "thm4.2",
    "polymatroid": "thm5.4",
}


@dataclass
class VerificationJob:
    theorem: str
    qs: tuple = (2,)
    n_range: tuple = (1, 3)
    m_range: tuple = (1, 3)
    dims: tuple | None = None
    codeword_cap: int = DEFAULT_CODEWORD_CAP
    subspace_cap: int = DEFAULT_SUBSPACE_CAP
    group_cap: int = DEFAULT_GROUP_CAP
    seed: int = 0
    axiom_mode: str = "exhaustive"
    samples: int = 2000

    def __post_init__(self):
        self.theorem = THEOREM_ALIASES.get(self.theorem, self.theorem)
        if self.theorem not in CHECKERS:
            raise ValueError(f"unknown theorem id {self.theorem!r}; choose from {sorted(CHECKERS)}")
        lo, hi = self.n_range
        mlo, mhi = self.m_range
        if not self.qs or lo > hi or mlo > mhi or lo < 1 or mlo < 1:
            raise ValueError("parameter ranges must be nonempty and positive")
        if min(self.codeword_cap, self.subspace_cap, self.group_cap) <= 0:
            raise ValueError("caps must be positive")
        if self.axiom_mode not in ("exhaustive", "sampled"):
            raise ValueError("axiom_mode must be 'exhaustive' or 'sampled'")


@dataclass
class Row:
    theorem: str
    point: dict
    expected: str
    observed: str
    status: str

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "point": self.point, "expected": self.expected,
                "observed": self.observed, "status": self.status}


def _shapes(job):
    for q in job.qs:
        for n in range(job.n_range[0], job.n_range[1] + 1):
            for m in range(max(n, job.m_range[0]), job.m_range[1] + 1):
                yield q, n, m


def _block_params(n, m, k_max=None):
    for s in range(n + 1):
        for h in range(n - s + 1):
            if s + h == 0:
                continue
            for k in range(m + 1 if k_max is None else k_max + 1):
                yield s, h, k


# -- point generators ---------------------------------------------------------------

def _points_shapes(job):
    for q, n, m in _shapes(job):
        yield {"q": q, "n": n, "m": m}


def _points_audit(job):
    for q, n, m in _shapes(job):
        dims = job.dims if job.dims else [d for d in range(1, n * m) if d % m]
        for d in dims:
            yield {"q": q, "n": n, "m": m, "dim": d}


def _points_block_qoac(job):
    for q, n, m in _shapes(job):
        for s, h, k in _block_params(n, m, k_max=m - 1):
            yield {"q": q, "n": n, "m": m, "s": s, "h": h, "k": k}


def _points_full_block(job):
    for q, n, m in _shapes(job):
        for s, k in product(range(n + 1), range(m + 1)):
            yield {"q": q, "n": n, "m": m, "s": s, "k": k}


def _points_block(job):
    for q, n, m in _shapes(job):
        for s, h, k in _block_params(n, m):
            yield {"q": q, "n": n, "m": m, "s": s, "h": h, "k": k}


# -- checkers --------------------------------------------------------------------------

def check_maxrank_sum(job, q, n, m):
    """Scan every code in F_q^{n x m}; count codes violating the trichotomy."""
    F = field_from_order(q)
    check_budget("subspace", count_subspaces(n * m, q), job.subspace_cap)
    exceptions = scanned = 0
    for V in all_subspaces(n * m, F, cap=None):
        C = RankMetricCode(n, m, V)
        D = C.dual()
        r, rd = maxrk(C, job.codeword_cap), maxrk(D, job.codeword_cap)
        total = r + rd
        opt = is_optimal_anticode(C, _maxrk=r)
        dually = is_qoac(C, _maxrk=r) and is_qoac(D, _maxrk=rd)
        scanned += 1
        if total < n or (total == n) != opt or (total == n + 1) != dually:
            exceptions += 1
    return f"0 exceptions in {scanned} codes", f"{exceptions} exceptions in {scanned} codes"


def check_audit(job, q, n, m, dim):
    F = field_from_order(q)
    report = audit_dually_qoac_classification(F, n, m, dim, job.subspace_cap, job.group_cap)
    return (f"{report.dually_qoac} classified",
            f"{report.classified} classified" + ("" if report.ok else f", {len(report.unclassified)} unclassified"))


def check_block_qoac(job, q, n, m, s, h, k):
    F = field_from_order(q)
    C = block_code(F, n, m, s, h, k, validate_cap=None)
    return str(block_code_is_qoac(s, h, k, m, n)), str(is_qoac(C, job.codeword_cap))


def check_weights(job, q, n, m, s, k):
    F = field_from_order(q)
    C = block_code(F, n, m, s, n - s, k, validate_cap=None) if n else None
    return str(generalized_weights_closed_form(s, k, n, m)), str(generalized_weights_oracle(C, job.subspace_cap))


def check_rank_distribution(job, q, n, m, s, k):
    F = field_from_order(q)
    C = block_code(F, n, m, s, n - s, k, validate_cap=None)
    return str(rank_distribution_closed_form(s, k, n, m, q)), str(rank_distribution_oracle(C, job.codeword_cap))


def check_polymatroid(job, q, n, m, s, h, k):
    """Compare both rank functions with their closed forms on every subspace."""
    F = field_from_order(q)
    C = block_code(F, n, m, s, h, k, validate_cap=None)
    bad = total = 0
    for J in all_subspaces(n, F, job.subspace_cap):
        total += 1
        bad += rho_c(C, J) != rho_c_closed_form(s, h, k, n, m, J)
    for K in all_subspaces(m, F, job.subspace_cap):
        total += 1
        bad += rho_r(C, K) != rho_r_closed_form(s, h, k, n, m, K)
    return f"0 of {total} differ", f"{bad} of {total} differ"


def check_axioms(job, q, n, m, s, h, k):
    F = field_from_order(q)
    C = block_code(F, n, m, s, h, k, validate_cap=None)
    reports = [verify_qpolymatroid_axioms(C, side, job.axiom_mode, samples=job.samples, seed=job.seed,
                                          cap=job.subspace_cap)
               for side in ("columns", "rows")]
    observed = "; ".join(f"{r.side}: " + ("ok" if r.ok else f"{r.violation} at {r.witness}") for r in reports)
    return "columns: ok; rows: ok", observed


CHECKERS = {
    "prop2.4": (_points_shapes, check_maxrank_sum),
    "thm2.5-audit": (_points_audit, check_audit),
    "prop2.11": (_points_block_qoac, check_block_qoac),
    "thm3.3": (_points_full_block, check_weights),
    "thm4.2": (_points_full_block, check_rank_distribution),
    "thm5.4": (_points_block, check_polymatroid),
    "axioms": (_points_block, check_axioms),
}


def _run_point(job, checker, point) -> Row:
    try:
        expected, observed = checker(job, **point)
    except BudgetExceeded as exc:
        return Row(job.theorem, point, "", str(exc), SKIPPED)
    return Row(job.theorem, point, expected, observed, MATCH if expected == observed else MISMATCH)


def run_job(job: VerificationJob, threads: int = 1) -> list[Row]:
    """Evaluate every parameter point; row order is independent of ``threads``."""
    points_fn, checker = CHECKERS[job.theorem]
    points = list(points_fn(job))
    if threads <= 1:
        return [_run_point(job, checker, p) for p in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda p: _run_point(job, checker, p), points))
