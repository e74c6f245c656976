"""
Counting dually qOACs
=====================

Scan every 4-dimensional code in F_2^{2x3}, keep those whose dual is also a
qOAC and match each one against the canonical forms up to isometry.
"""

from rankmetric.constructions import dually_qoac_form
from rankmetric.equivalence import apply_isometry, audit_dually_qoac_classification
from rankmetric.field import make_field

F = make_field(2)
report = audit_dually_qoac_classification(F, 2, 3, 4)
print(f"{report.scanned} codes scanned, {report.dually_qoac} dually qOACs")
print("per form:", report.per_form)
print("unclassified:", len(report.unclassified))

# every match comes with an isometry; replay one
code, form, phi = report.witnesses[0]
canon = dually_qoac_form(F, 2, 3, 1, 1, form)
print(form, phi.to_json())
print(apply_isometry(phi, canon) == code)
