"""
A genus-two catalog of quartic relations
========================================

Ten even genus-two constants are arranged as a distinguished label "00" plus
a 3x3 matrix of two-digit labels. Each generalized diagonal gives a Type I
relation and each 2x2 minor gives a Type II relation, both as fourth powers
and as theta(tau) theta(3 tau) products. Auditing the matrix as given flags
every identity touching its repeated label.
"""

from thetamod import siegel_samples
from thetamod.genus2 import LABEL_MATRIX, LABEL_MATRIX_CORRECTED, audit_catalog, labels_distinct_and_even

taus = siegel_samples(2, seed=1, count=5)
for name, matrix in (("as given", LABEL_MATRIX), ("corrected", LABEL_MATRIX_CORRECTED)):
    audits = audit_catalog(taus, matrix)
    flagged = [a for a in audits if a.flagged]
    print(f"{name}: rows {matrix}, distinct={labels_distinct_and_even(matrix)}")
    print(f"  {len(flagged)} of {len(audits)} identities flagged")
    for a in flagged[:3]:
        print(f"    {a.identity.name}  worst rel {a.worst_relative:.2f}")
