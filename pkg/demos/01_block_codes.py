"""
Block codes and the qOAC test
=============================

A block code fills the top s rows of an n x m matrix and an h x k block
under them.  We build a few, look at their rank statistics and compare the
closed-form qOAC test with brute force.
"""

from rankmetric.codes import analyze, is_qoac
from rankmetric.constructions import block_code, block_code_is_qoac
from rankmetric.field import make_field
from rankmetric.invariants import rank_distribution_closed_form, rank_distribution_oracle

F = make_field(2)

# the smallest interesting one: a full first row plus one entry below it
C = block_code(F, 2, 2, 1, 1, 1)
for B in C.basis_matrices():
    print(B)
print(analyze(C))

# the codeword census and the counting formula agree
print(rank_distribution_oracle(C), rank_distribution_closed_form(1, 1, 2, 2, 2))

# sweep every block code in F_2^{3x4} with k < 4
for s in range(4):
    for h in range(4 - s):
        for k in range(4):
            if s + h == 0:
                continue
            D = block_code(F, 3, 4, s, h, k)
            print((s, h, k), D.dim, block_code_is_qoac(s, h, k, 4, 3), is_qoac(D))
