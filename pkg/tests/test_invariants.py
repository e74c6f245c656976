from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rankmetric.codes import RankMetricCode, code_from_matrices, is_qoac, mat_support, maxrk, min_distance
from rankmetric.combinatorics import all_subspaces, count_rank_matrices, enumerate_subspaces
from rankmetric.constructions import block_code, linked_diagonal_code, two_row_family, zero_diagonal_code
from rankmetric.field import field_from_order, make_field
from rankmetric.invariants import (generalized_weights_closed_form, generalized_weights_oracle,
                                   qoac_via_polymatroid, rank_distribution_closed_form, rank_distribution_oracle,
                                   rho_c, rho_c_closed_form, rho_closed_form, rho_r, rho_r_closed_form,
                                   verify_qpolymatroid_axioms)
from rankmetric.linalg import Subspace

from oracles import rank_distribution_naive

F2 = make_field(2)


def C111():
    return block_code(F2, 2, 2, 1, 1, 1)


def random_code(q, n, m, d, seed):
    F = field_from_order(q)
    if d == 0:
        return RankMetricCode.zero(F, n, m)
    rng = np.random.default_rng(seed)
    return RankMetricCode.from_matrices(F, rng.integers(0, q, size=(d, n, m)), shape=(n, m))


# -- generalized weights --------------------------------------------------------------

def test_weights_of_support_spaces():
    for n, m in [(2, 2), (2, 3), (3, 3)]:
        for r in range(1, n + 1):
            V = next(enumerate_subspaces(n, r, F2))
            assert generalized_weights_oracle(mat_support(V, m)) == [i for i in range(1, r + 1) for _ in range(m)]


def test_weights_small_examples():
    assert generalized_weights_oracle(C111()) == [1, 1, 2]
    assert generalized_weights_closed_form(1, 1, 2, 2) == [1, 1, 2]
    assert generalized_weights_closed_form(2, 1, 3, 3) == [1, 1, 1, 2, 2, 2, 3]
    assert generalized_weights_oracle(block_code(F2, 3, 3, 2, 1, 1)) == [1, 1, 1, 2, 2, 2, 3]
    # s = 0, k = m is the whole space
    assert generalized_weights_closed_form(0, 3, 2, 3) == [1, 1, 1, 2, 2, 2]
    with pytest.raises(ValueError):
        generalized_weights_closed_form(3, 0, 2, 3)


def test_single_matrix_weight_is_its_rank():
    for r in range(4):
        M = np.zeros((3, 4), dtype=np.int64)
        M[range(r), range(r)] = 1
        if r:
            assert generalized_weights_oracle(code_from_matrices(F2, [M])) == [r]


@pytest.mark.parametrize("q", [2, 3])
def test_weights_closed_form_off_the_square_case(q):
    # rectangular shapes, and square shapes with k <= s
    F = field_from_order(q)
    for n, m in [(1, 2), (1, 3), (2, 3), (2, 2), (3, 3)]:
        for s in range(n + 1):
            for k in range(m + 1):
                if n == m and k > s:
                    continue
                C = block_code(F, n, m, s, n - s, k, validate_cap=None)
                assert generalized_weights_closed_form(s, k, n, m) == generalized_weights_oracle(C)


def test_square_weights_are_transpose_symmetric():
    # with n = m the transposed support spaces are optimal anticodes too, so
    # the weights of the (s, k) and (k, s) block codes coincide
    for n in (2, 3):
        for s in range(n + 1):
            for k in range(n + 1):
                A = block_code(F2, n, n, s, n - s, k, validate_cap=None)
                B = block_code(F2, n, n, k, n - k, s, validate_cap=None)
                assert generalized_weights_oracle(A) == generalized_weights_oracle(B)
    # literal formula, as stated; the oracle finds the transposed anticode
    assert generalized_weights_closed_form(0, 1, 2, 2) == [1, 2]
    assert generalized_weights_oracle(block_code(F2, 2, 2, 0, 2, 1)) == [1, 1]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 3), st.integers(1, 3), st.integers(1, 4), st.integers(0, 2**32))
def test_weight_properties(q, n, m, d, seed):
    C = random_code(q, n, m, d, seed)
    a = generalized_weights_oracle(C)
    assert len(a) == C.dim
    if not a:
        return
    assert a[0] == min_distance(C)
    assert all(x <= y for x, y in zip(a, a[1:]))
    assert a[-1] <= min(n, m)
    assert generalized_weights_oracle(C.transpose()) == a


# -- rank distribution ----------------------------------------------------------------

def test_rank_distribution_examples():
    assert rank_distribution_oracle(RankMetricCode.zero(F2, 2, 2)) == [1, 0, 0]
    assert rank_distribution_oracle(RankMetricCode.full(F2, 2, 2)) == [1, 9, 6]
    assert rank_distribution_oracle(C111()) == [1, 5, 2]
    assert rank_distribution_closed_form(1, 1, 2, 2, 2) == [1, 5, 2]
    with pytest.raises(ValueError):
        rank_distribution_closed_form(1, 1, 2, 2, 2, h=0)


# computed once with the naive row-space-counting oracle in tests/oracles.py
FROZEN_DISTRIBUTIONS = {
    (3, 2, 3, 1, 1, 2): [1, 50, 192],
    (2, 3, 3, 1, 2, 2): [1, 25, 78, 24],
    (2, 2, 4, 0, 2, 3): [1, 21, 42],
}


@pytest.mark.parametrize("key", sorted(FROZEN_DISTRIBUTIONS))
def test_rank_distribution_frozen(key):
    q, n, m, s, h, k = key
    C = block_code(make_field(q), n, m, s, h, k)
    want = FROZEN_DISTRIBUTIONS[key]
    assert rank_distribution_oracle(C) == want
    assert rank_distribution_closed_form(s, k, n, m, q) == want
    assert rank_distribution_naive([B.tolist() for B in C.basis_matrices()], n, m, q) == want


def test_linked_diagonal_distribution():
    assert rank_distribution_oracle(linked_diagonal_code()) == [1, 25, 174, 312, 0]


def test_degenerate_rank_distributions():
    for q in (2, 3):
        for n, m in [(2, 2), (2, 3), (3, 3)]:
            assert rank_distribution_closed_form(0, m, n, m, q) == [count_rank_matrices(n, m, r, q) for r in range(n + 1)]
            for s in range(n + 1):
                want = [count_rank_matrices(s, m, r, q) for r in range(n + 1)]
                assert rank_distribution_closed_form(s, 0, n, m, q) == want


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 3), st.integers(1, 3), st.integers(0, 4), st.integers(0, 2**32))
def test_rank_distribution_sums(q, n, m, d, seed):
    C = random_code(q, n, m, d, seed)
    A = rank_distribution_oracle(C)
    assert sum(A) == q**C.dim and A[0] == 1
    assert A == rank_distribution_naive([B.tolist() for B in C.basis_matrices()], n, m, q)


# -- rank functions --------------------------------------------------------------------

def test_rank_function_examples():
    C = C111()
    full, zero = Subspace.full(F2, 2), Subspace.zero(F2, 2)
    assert rho_c(C, full) == Fraction(3, 2) and rho_c(C, zero) == 0
    assert rho_r(C, full) == Fraction(3, 2) and rho_r(C, zero) == 0
    f1 = Subspace.standard(F2, 2, [0])
    assert rho_r(C, f1) == 1 == rho_r_closed_form(1, 1, 1, 2, 2, f1)
    assert rho_closed_form(1, 1, 1, 2, 2, K=f1) == 1
    assert rho_closed_form(1, 1, 1, 2, 2, J=zero) == 0
    with pytest.raises(ValueError):
        rho_closed_form(1, 1, 1, 2, 2)
    with pytest.raises(ValueError):
        rho_c(C, Subspace.full(F2, 3))


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_rank_function_closed_forms(n, m):
    for s in range(n + 1):
        for h in range(n - s + 1):
            for k in range(m + 1):
                if s + h == 0:
                    continue
                C = block_code(F2, n, m, s, h, k, validate_cap=None)
                for J in all_subspaces(n, F2):
                    assert rho_c(C, J) == rho_c_closed_form(s, h, k, n, m, J)
                for K in all_subspaces(m, F2):
                    assert rho_r(C, K) == rho_r_closed_form(s, h, k, n, m, K)


GALLERY_CODES = [
    C111(),
    block_code(F2, 3, 3, 1, 1, 2),
    two_row_family(F2, 2, 3, 1, 1, 1),
    zero_diagonal_code(F2, 2, 3, 1, 1),
    zero_diagonal_code(F2, 3, 3, 2, 1),
]


@pytest.mark.parametrize("C", GALLERY_CODES, ids=repr)
def test_axioms_hold_on_gallery_codes(C):
    for side in ("columns", "rows"):
        rep = verify_qpolymatroid_axioms(C, side)
        assert rep.ok, rep.to_json()


def test_axioms_on_every_2x2_code():
    for V in all_subspaces(4, F2):
        C = RankMetricCode(2, 2, V)
        assert verify_qpolymatroid_axioms(C, "columns").ok


def test_corrupted_rank_function_is_caught():
    C = block_code(F2, 2, 3, 1, 1, 2)
    target = Subspace.standard(F2, 2, [0])

    def broken(J):
        value = rho_c(C, J)
        return value + 1 if J == target else value

    rep = verify_qpolymatroid_axioms(C, "columns", rank_function=broken)
    assert not rep.ok and rep.violation in ("bounds", "monotonicity", "submodularity")

    def not_submodular(J):
        return [Fraction(0), Fraction(1, 2), Fraction(2)][J.dim]

    rep = verify_qpolymatroid_axioms(C, "columns", rank_function=not_submodular)
    assert rep.violation == "submodularity"
    rep = verify_qpolymatroid_axioms(C, "columns", mode="sampled", rank_function=lambda J: Fraction(J.dim + 1))
    assert rep.violation == "bounds"


def test_sampled_mode_is_reproducible():
    C = block_code(F2, 3, 4, 1, 1, 2)
    a = verify_qpolymatroid_axioms(C, "rows", mode="sampled", samples=200, seed=5)
    b = verify_qpolymatroid_axioms(C, "rows", mode="sampled", samples=200, seed=5)
    assert a.ok and a == b
    with pytest.raises(ValueError):
        verify_qpolymatroid_axioms(C, "diagonal")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 6), st.integers(0, 2**32))
def test_qoac_via_rank_function(n, m, d, seed):
    C = random_code(2, n, m, min(d, n * m), seed)
    if C.dim % max(n, m) == 0:
        with pytest.raises(ValueError):
            qoac_via_polymatroid(C)
    else:
        assert qoac_via_polymatroid(C) == is_qoac(C)
