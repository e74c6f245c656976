"""Code invariants, each as a closed form and as an independent oracle.

* generalized weights: smallest optimal anticode meeting the code in at
  least i dimensions, searched over the support spaces Mat(V) / Mat(U)^t;
* rank distribution: codeword census;
* the column and row q-polymatroid rank functions, as exact fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil

import numpy as np

from .budget import DEFAULT_CODEWORD_CAP, DEFAULT_SUBSPACE_CAP, check_budget
from .codes import RankMetricCode, codeword_rank_batches, mat_support, mat_support_rows, maxrk
from .combinatorics import all_subspaces, count_rank_matrices, count_subspaces, enumerate_subspaces, gaussian_binomial
from .field import GF
from .linalg import Subspace


# -- generalized weights ------------------------------------------------------------

def optimal_anticode_sides(n: int, m: int) -> list[str]:
    """Which support families are optimal anticodes: 'columns' gives Mat(V),
    'rows' gives Mat(U)^t.  Both when the matrices are square."""
    sides = []
    if n <= m:
        sides.append("columns")
    if n >= m:
        sides.append("rows")
    return sides


def generalized_weights_oracle(C: RankMetricCode, cap: int | None = DEFAULT_SUBSPACE_CAP) -> list[int]:
    """a_1..a_dim by search over all optimal anticodes.

    Optimal anticodes are exactly Mat(V) (n <= m) and Mat(U)^t (n >= m), so
    the search runs over subspaces of F^n and F^m instead of subspaces of
    the whole matrix space.  Intersections are computed by linear algebra.
    """
    F, n, m = C.field, C.n, C.m
    sides = optimal_anticode_sides(n, m)
    check_budget("subspace", sum(count_subspaces(n if s == "columns" else m, F.q) for s in sides), cap)

    best = []  # best[r]: largest dim(A & C) over optimal anticodes of maximum rank r
    for r in range(min(n, m) + 1):
        top = 0
        for side in sides:
            ell = n if side == "columns" else m
            for V in enumerate_subspaces(ell, r, F, cap=None):
                A = mat_support(V, m) if side == "columns" else mat_support_rows(V, n)
                top = max(top, C.intersection_dim(A))
                if top == C.dim:
                    break
            if top == C.dim:
                break
        best.append(top)
        if top == C.dim:
            break

    weights = []
    r = 0
    for i in range(1, C.dim + 1):
        while best[r] < i:
            r += 1
        weights.append(r)
    return weights


def generalized_weights_closed_form(s: int, k: int, n: int, m: int) -> list[int]:
    """Weights of Mat(<e_1..e_s>) + Mat(<f_1..f_k>)^t in F^{n x m}.

    Blocks of m copies of 1..s, then blocks of k copies of s+1..n.  Derived
    by comparing against the column supports Mat(V) only.
    """
    if not (0 <= s <= n and 0 <= k <= m and n >= 1):
        raise ValueError(f"need 0 <= s <= n and 0 <= k <= m; got s={s}, k={k}, n={n}, m={m}")
    out = [i for i in range(1, s + 1) for _ in range(m)]
    out += [s + i for i in range(1, n - s + 1) for _ in range(k)]
    return out


# -- rank distribution ----------------------------------------------------------------

def rank_distribution_oracle(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP) -> list[int]:
    """A_0..A_min(n,m): number of codewords of each rank."""
    size = min(C.n, C.m) + 1
    hist = np.zeros(size, dtype=np.int64)
    for ranks in codeword_rank_batches(C, cap):
        hist += np.bincount(ranks, minlength=size)
    return [int(x) for x in hist]


def rank_distribution_closed_form(s: int, k: int, n: int, m: int, q: int, h: int | None = None) -> list[int]:
    """A_0..A_n for Mat(<e_1..e_s>) + Mat(<f_1..f_k>)^t in F_q^{n x m}, n <= m.

    A rank-r codeword either lives in the first s rows, or its last n-s rows
    span an i-dimensional subspace of <f_1..f_k>; the i-th summand counts
    those by their row space.
    """
    if h is not None and h != n - s:
        raise ValueError(f"the counting formula needs h = n - s, got h={h} with n={n}, s={s}")
    if not (0 <= s <= n <= m and 0 <= k <= m):
        raise ValueError(f"need 0 <= s <= n <= m and 0 <= k <= m; got s={s}, k={k}, n={n}, m={m}")
    A = [0] * (n + 1)
    A[0] = 1
    for r in range(1, min(s + k, n) + 1):
        total = count_rank_matrices(s, m, r, q)
        for i in range(1, min(n - s, k, r) + 1):
            term = gaussian_binomial(k, i, q) * gaussian_binomial(m - i, r - i, q) * q ** (s * i)
            for t in range(i):
                term *= q ** (n - s) - q**t
            for j in range(r - i):
                term *= q**s - q**j
            total += term
        A[r] = total
    return A


# -- q-polymatroid rank functions -------------------------------------------------------

def rho_c(C: RankMetricCode, J: Subspace) -> Fraction:
    """Column rank function: (dim C - dim(C & Mat(J^perp))) / m."""
    if J.ambient != C.n or J.field != C.field:
        raise ValueError("J must be a subspace of F_q^n")
    return Fraction(C.dim - C.intersection_dim(mat_support(J.orthogonal(), C.m)), C.m)


def rho_r(C: RankMetricCode, K: Subspace) -> Fraction:
    """Row rank function: (dim C - dim(C & Mat(K^perp)^t)) / n."""
    if K.ambient != C.m or K.field != C.field:
        raise ValueError("K must be a subspace of F_q^m")
    return Fraction(C.dim - C.intersection_dim(mat_support_rows(K.orthogonal(), C.n)), C.n)


def _check_block_params(s, h, k, n, m):
    if min(s, h, k) < 0 or k > m or not 0 < s + h <= n:
        raise ValueError(f"need s,h,k >= 0, k <= m, 0 < s+h <= n; got s={s}, h={h}, k={k}, n={n}, m={m}")


def rho_c_closed_form(s: int, h: int, k: int, n: int, m: int, J: Subspace) -> Fraction:
    """Column rank function of the block code with parameters (s, h, k)."""
    _check_block_params(s, h, k, n, m)
    F = J.field
    Jp = J.orthogonal()
    in_v = (Subspace.standard(F, n, range(s)) & Jp).dim
    in_v2 = (Subspace.standard(F, n, range(s + h)) & Jp).dim
    return s - in_v + Fraction(k * (h + in_v - in_v2), m)


def rho_r_closed_form(s: int, h: int, k: int, n: int, m: int, K: Subspace) -> Fraction:
    """Row rank function of the block code with parameters (s, h, k)."""
    _check_block_params(s, h, k, n, m)
    in_u = (Subspace.standard(K.field, m, range(k)) & K.orthogonal()).dim
    return Fraction(h * (k - in_u) + s * K.dim, n)


def rho_closed_form(s: int, h: int, k: int, n: int, m: int, J: Subspace | None = None, K: Subspace | None = None) -> Fraction:
    if (J is None) == (K is None):
        raise ValueError("pass exactly one of J (column side) or K (row side)")
    if J is not None:
        return rho_c_closed_form(s, h, k, n, m, J)
    return rho_r_closed_form(s, h, k, n, m, K)


class _Lattice:
    """All subspaces of F^ell with memoized joins, meets and containment."""

    def __init__(self, F: GF, ell: int, cap):
        self.field = F
        self.ell = ell
        self.spaces = list(all_subspaces(ell, F, cap))
        self.index = {V: i for i, V in enumerate(self.spaces)}
        self._ops = {}

    def ops(self, i: int, j: int):
        key = (i, j) if i <= j else (j, i)
        hit = self._ops.get(key)
        if hit is None:
            A, B = self.spaces[i], self.spaces[j]
            S, I = A + B, A & B
            hit = (self.index[S], self.index[I], I == A, I == B)
            self._ops[key] = hit
        if key != (i, j):
            return hit[0], hit[1], hit[3], hit[2]
        return hit


@lru_cache(maxsize=32)
def _lattice(F: GF, ell: int, cap) -> _Lattice:
    return _Lattice(F, ell, cap)


@dataclass
class AxiomReport:
    ok: bool
    side: str
    mode: str
    subspaces: int
    pairs: int
    violation: str | None = None
    witness: tuple | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok, "side": self.side, "mode": self.mode,
            "subspaces": self.subspaces, "pairs": self.pairs, "violation": self.violation,
            "witness": None if self.witness is None else [
                [list(r) for r in V.basis] for V in self.witness],
        }


def _random_subspace(F: GF, ell: int, rng: random.Random) -> Subspace:
    d = rng.randint(0, ell)
    return Subspace.span(F, ell, [[rng.randrange(F.q) for _ in range(ell)] for _ in range(d)])


def verify_qpolymatroid_axioms(C: RankMetricCode, side: str = "columns", mode: str = "exhaustive",
                               samples: int = 2000, seed: int = 0, rank_function=None,
                               cap: int | None = DEFAULT_SUBSPACE_CAP) -> AxiomReport:
    """Check boundedness, monotonicity and submodularity of rho_c or rho_r.

    ``rank_function`` overrides the code's rank function (used to confirm
    that a corrupted function is caught).  Stops at the first violation.
    """
    if side not in ("columns", "rows"):
        raise ValueError("side must be 'columns' or 'rows'")
    F = C.field
    ell = C.n if side == "columns" else C.m
    if rank_function is None:
        rank_function = (lambda V: rho_c(C, V)) if side == "columns" else (lambda V: rho_r(C, V))

    if mode == "exhaustive":
        lat = _lattice(F, ell, cap)
        values = [rank_function(V) for V in lat.spaces]
        for i, V in enumerate(lat.spaces):
            if not 0 <= values[i] <= V.dim:
                return AxiomReport(False, side, mode, len(values), 0, "bounds", (V,))
        pairs = 0
        for i in range(len(values)):
            for j in range(len(values)):
                s_idx, i_idx, i_in_j, j_in_i = lat.ops(i, j)
                pairs += 1
                if i_in_j and values[i] > values[j]:
                    return AxiomReport(False, side, mode, len(values), pairs, "monotonicity",
                                       (lat.spaces[i], lat.spaces[j]))
                if values[s_idx] + values[i_idx] > values[i] + values[j]:
                    return AxiomReport(False, side, mode, len(values), pairs, "submodularity",
                                       (lat.spaces[i], lat.spaces[j]))
        return AxiomReport(True, side, mode, len(values), pairs)

    if mode != "sampled":
        raise ValueError("mode must be 'exhaustive' or 'sampled'")
    rng = random.Random(seed)
    seen = set()
    for t in range(samples):
        A = _random_subspace(F, ell, rng)
        B = _random_subspace(F, ell, rng)
        bigger = A + _random_subspace(F, ell, rng)
        seen.update((A, B))
        ra, rb = rank_function(A), rank_function(B)
        for V, r in ((A, ra), (B, rb)):
            if not 0 <= r <= V.dim:
                return AxiomReport(False, side, mode, len(seen), t, "bounds", (V,))
        if ra > rank_function(bigger):
            return AxiomReport(False, side, mode, len(seen), t, "monotonicity", (A, bigger))
        if rank_function(A + B) + rank_function(A & B) > ra + rb:
            return AxiomReport(False, side, mode, len(seen), t, "submodularity", (A, B))
    return AxiomReport(True, side, mode, len(seen), samples)


def qoac_via_polymatroid(C: RankMetricCode, cap: int | None = DEFAULT_CODEWORD_CAP) -> bool:
    """qOAC test through the rank function of the whole space.

    Uses the column function when n <= m and the row function otherwise, so
    that the denominator is the larger side.
    """
    big = C.big_side
    if C.dim % big == 0:
        raise ValueError(f"dimension {C.dim} is divisible by {big}; the criterion does not apply")
    F = C.field
    if C.n <= C.m:
        value = rho_c(C, Subspace.full(F, C.n))
    else:
        value = rho_r(C, Subspace.full(F, C.m))
    return ceil(value) == maxrk(C, cap)
