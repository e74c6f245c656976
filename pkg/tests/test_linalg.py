import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rankmetric.field import field_from_order, make_field
from rankmetric.linalg import (Subspace, batch_rank, col_space, is_invertible, rank, row_space, rref,
                               sum_dim, trace_pairing)

from oracles import naive_rank, span_set

F2, F3 = make_field(2), make_field(3)


def matrices(q, max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, q - 1), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rank_examples():
    assert rank(F2, np.zeros((3, 3), dtype=int)) == 0
    assert rank(F2, np.eye(3, dtype=int)) == 3
    assert rank(F2, [[1, 1], [1, 1]]) == 1


def test_rref_examples():
    R, piv = rref(F2, np.eye(3, dtype=int))
    assert R.tolist() == np.eye(3, dtype=int).tolist() and piv == [0, 1, 2]
    R, piv = rref(F2, [[0, 1], [0, 1]])
    assert R.tolist() == [[0, 1], [0, 0]] and piv == [1]
    # det 2*2 - 1*1 = 3 = 0 in F_3
    R, piv = rref(F3, [[2, 1], [1, 2]])
    assert R.tolist() == [[1, 2], [0, 0]] and piv == [0]


def test_row_and_column_spaces():
    E11 = [[1, 0], [0, 0]]
    assert col_space(F2, E11) == Subspace.standard(F2, 2, [0])
    assert row_space(F2, np.zeros((2, 2), dtype=int)) == Subspace.zero(F2, 2)
    assert row_space(F2, [[1, 1], [1, 1]]) == Subspace.span(F2, 2, [[1, 1]])


def test_trace_pairing_examples():
    E11, E22 = [[1, 0], [0, 0]], [[0, 0], [0, 1]]
    assert trace_pairing(F2, E11, E11) == 1
    assert trace_pairing(F2, E11, E22) == 0
    assert trace_pairing(F2, [[1, 1], [1, 1]], [[1, 1], [1, 1]]) == 0
    with pytest.raises(ValueError):
        trace_pairing(F2, E11, [[1, 0, 0]])


def test_subspace_examples():
    e = lambda *c: Subspace.standard(F2, 3, c)
    assert Subspace.standard(F2, 2, [0]).orthogonal() == Subspace.standard(F2, 2, [1])
    assert e(0, 1) & e(1, 2) == e(1)
    assert e(0) + e(1) == e(0, 1)
    assert e(0) <= e(0, 2) and not e(1) <= e(0, 2)
    assert (1, 0, 1) in e(0, 2)
    with pytest.raises(ValueError):
        Subspace.span(F2, 3, [[1, 0]])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]).flatmap(lambda q: st.tuples(st.just(q), matrices(q))))
def test_rank_matches_row_space_count(args):
    q, M = args
    F = make_field(q)
    assert rank(F, M) == naive_rank(M, q)
    assert rank(F, np.array(M).T) == rank(F, M)


@settings(max_examples=40, deadline=None)
@given(matrices(4, 3, 3))
def test_rank_over_f4_is_transpose_invariant(M):
    F = field_from_order(4)
    A = np.array(M)
    assert rank(F, A) == rank(F, A.T)
    R, piv = rref(F, A)
    assert rank(F, R) == len(piv) == rank(F, A)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]).flatmap(lambda q: st.tuples(st.just(q), matrices(q, 3, 4), matrices(q, 3, 4))))
def test_sum_intersection_and_perp(args):
    q, A, B = args
    F = make_field(q)
    ell = min(len(A[0]), len(B[0]))
    A = [r[:ell] for r in A]
    B = [r[:ell] for r in B]
    U, W = Subspace.span(F, ell, A), Subspace.span(F, ell, B)
    assert U.dim + W.dim == (U + W).dim + (U & W).dim
    assert set(span_set(U.basis, q) or {(0,) * ell}) & set(span_set(W.basis, q) or {(0,) * ell}) == \
        (span_set((U & W).basis, q) or {(0,) * ell})
    assert U.orthogonal().dim == ell - U.dim
    assert U.orthogonal().orthogonal() == U
    assert (U + W).orthogonal() == U.orthogonal() & W.orthogonal()
    for u in U.basis:
        for v in U.orthogonal().basis:
            assert F.dot(u, v) == 0
    assert sum_dim(F, ell, A, B) == (U + W).dim


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4, 8]), st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**32))
def test_batch_rank_matches_rank(q, n, m, seed):
    F = field_from_order(q)
    rng = np.random.default_rng(seed)
    mats = rng.integers(0, q, size=(20, n, m))
    assert batch_rank(F, mats).tolist() == [rank(F, M) for M in mats]


def test_invertibility():
    assert is_invertible(F2, [[1, 1], [0, 1]])
    assert not is_invertible(F2, [[1, 1], [1, 1]])
    assert not is_invertible(F2, [[1, 1, 0]])
