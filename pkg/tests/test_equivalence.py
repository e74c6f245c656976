import json
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rankmetric.budget import BudgetExceeded
from rankmetric.codes import RankMetricCode, code_from_matrices, mat_support, maxrk, min_distance
from rankmetric.combinatorics import gl_order
from rankmetric.constructions import block_code, linked_diagonal_code, two_row_family, zero_diagonal_code
from rankmetric.equivalence import (Isometry, apply_isometry, are_equivalent, audit_dually_qoac_classification,
                                    contained_in_mat_sum, general_linear_group, isometry_orbit, random_isometry)
from rankmetric.field import field_from_order, make_field
from rankmetric.invariants import rank_distribution_oracle
from rankmetric.linalg import Subspace

F2 = make_field(2)

SMALL_CODES = [
    block_code(F2, 2, 2, 1, 1, 1),
    block_code(F2, 3, 3, 1, 1, 2),
    block_code(F2, 2, 3, 0, 2, 2),
    two_row_family(F2, 2, 3, 1, 1, 1),
    zero_diagonal_code(F2, 2, 3, 1, 1),
    mat_support(Subspace.standard(F2, 3, [0, 2]), 2),
]


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 2), (4, 2)])
def test_general_linear_group(q, n):
    F = field_from_order(q)
    G = general_linear_group(F, n)
    assert len(G) == gl_order(n, q)
    assert len({g.tobytes() for g in G}) == len(G)


def test_apply_isometry_examples():
    e1 = Subspace.standard(F2, 2, [0])
    C = mat_support(e1, 2)
    assert apply_isometry(Isometry.identity(2, 2), C) == C
    swap = Isometry(np.array([[0, 1], [1, 0]]), np.eye(2, dtype=np.int64))
    assert apply_isometry(swap, C) == mat_support(Subspace.standard(F2, 2, [1]), 2)
    t = Isometry(np.eye(2, dtype=np.int64), np.eye(2, dtype=np.int64), transpose=True)
    B = block_code(F2, 2, 2, 1, 1, 1)
    assert apply_isometry(t, B) == B.transpose() and B.transpose().dim == 3
    with pytest.raises(ValueError):
        apply_isometry(Isometry(np.zeros((2, 2), dtype=np.int64), np.eye(2, dtype=np.int64)), C)
    with pytest.raises(ValueError):
        Isometry(np.eye(2, dtype=np.int64), np.eye(3, dtype=np.int64), transpose=True)


@pytest.mark.parametrize("C", SMALL_CODES, ids=repr)
def test_isometries_preserve_invariants(C):
    rng = random.Random(7)
    for _ in range(5):
        phi = random_isometry(C.field, C.n, C.m, rng)
        D = apply_isometry(phi, C)
        assert D.dim == C.dim and maxrk(D) == maxrk(C) and min_distance(D) == min_distance(C)
        assert rank_distribution_oracle(D) == rank_distribution_oracle(C)
        assert rank_distribution_oracle(D.dual()) == rank_distribution_oracle(C.dual())
        found = are_equivalent(C, D)
        assert found is not None and apply_isometry(found, C) == D
        back = are_equivalent(D, C)
        assert back is not None and apply_isometry(back, D) == C


def test_equivalence_examples():
    C = SMALL_CODES[0]
    assert are_equivalent(C, C).to_json() == Isometry.identity(2, 2).to_json()
    A, B = two_row_family(F2, 2, 3, 1, 1, 0), two_row_family(F2, 2, 3, 1, 1, 2)
    phi = are_equivalent(A, B)
    assert phi is not None and apply_isometry(phi, A) == B
    # same dimension, different rank distributions
    X = code_from_matrices(F2, [[[1, 0], [0, 0]]])
    Y = code_from_matrices(F2, [[[1, 0], [0, 1]]])
    assert are_equivalent(X, Y) is None
    assert are_equivalent(X, Y, fingerprint=False) is None
    with pytest.raises(BudgetExceeded):
        are_equivalent(A, B, cap=10)


def test_isometry_json_round_trip():
    phi = random_isometry(F2, 3, 3, random.Random(1))
    back = Isometry.from_json(json.loads(json.dumps(phi.to_json())))
    assert back.to_json() == phi.to_json()


def test_orbit_of_a_line():
    C = mat_support(Subspace.standard(F2, 2, [0]), 2)
    orbit = isometry_orbit(C)
    # Mat(V) over the 3 lines V, plus the 3 transposed ones
    assert len(orbit) == 6
    for D, phi in orbit.items():
        assert apply_isometry(phi, C).space == D


def test_containment_examples():
    C = mat_support(Subspace.standard(F2, 2, [0]), 2)
    U, W = contained_in_mat_sum(C, 1, 0)
    assert U == Subspace.standard(F2, 2, [0]) and W.dim == 0
    assert contained_in_mat_sum(block_code(F2, 2, 2, 1, 1, 1), 1, 1) is not None
    assert contained_in_mat_sum(block_code(F2, 2, 2, 1, 1, 1), 1, 0) is None
    assert contained_in_mat_sum(C, 3, 0) is None


def test_linked_diagonal_not_in_any_sum():
    C = linked_diagonal_code()
    for s in range(4):
        assert contained_in_mat_sum(C, s, 3 - s) is None
    assert contained_in_mat_sum(C, 4, 0) is not None


def test_audit_small_census(tmp_path):
    rep = audit_dually_qoac_classification(F2, 2, 2, 3, dump_path=tmp_path / "dump.json")
    assert rep.scanned == 15 and rep.ok and rep.dually_qoac == rep.classified > 0
    assert set(rep.per_form) == {"a", "b", "c"}
    assert not (tmp_path / "dump.json").exists()
    for C, form, phi in rep.witnesses:
        assert form in rep.forms
    assert json.loads(json.dumps(rep.to_json()))["ok"]


def test_audit_dimension_divisible_by_m():
    rep = audit_dually_qoac_classification(F2, 2, 2, 2)
    assert rep.dually_qoac == 0 and rep.forms == [] and rep.scanned == 35


def test_audit_refuses_wide_shapes():
    with pytest.raises(ValueError):
        audit_dually_qoac_classification(F2, 3, 2, 1)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32))
def test_equivalence_is_symmetric_on_random_pairs(seed):
    rng = np.random.default_rng(seed)
    mk = lambda: RankMetricCode.from_matrices(F2, rng.integers(0, 2, size=(2, 2, 2)), shape=(2, 2))
    A, B = mk(), mk()
    assert (are_equivalent(A, B) is None) == (are_equivalent(B, A) is None)
