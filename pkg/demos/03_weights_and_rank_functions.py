"""
Generalized weights and rank functions
======================================

Generalized weights are found by searching all support spaces.  On square
matrices the transposed supports count too, and there the weights of a
block code are symmetric in (s, k).
"""

from rankmetric.codes import maxrk
from rankmetric.combinatorics import all_subspaces
from rankmetric.constructions import block_code, linked_diagonal_code
from rankmetric.equivalence import contained_in_mat_sum
from rankmetric.field import make_field
from rankmetric.invariants import (generalized_weights_closed_form, generalized_weights_oracle, rho_c,
                                   rho_c_closed_form, verify_qpolymatroid_axioms)

F = make_field(2)

for n, m in [(2, 3), (3, 3)]:
    for s in range(n + 1):
        for k in range(m + 1):
            C = block_code(F, n, m, s, n - s, k)
            oracle = generalized_weights_oracle(C)
            formula = generalized_weights_closed_form(s, k, n, m)
            flag = "" if oracle == formula else "  <- differs"
            print((n, m, s, k), oracle, formula, flag)

# the column rank function of a block code, on every subspace of F_2^3
C = block_code(F, 3, 3, 1, 1, 2)
for J in all_subspaces(3, F):
    print(J.basis, rho_c(C, J), rho_c_closed_form(1, 1, 2, 3, 3, J))
print(verify_qpolymatroid_axioms(C, "columns"))

# a 9-dimensional code of maximum rank 3 that sits in no Mat(U) + Mat(W)^t
L = linked_diagonal_code()
print(L.dim, maxrk(L), [contained_in_mat_sum(L, s, 3 - s) for s in range(4)])
