"""Manufactured-solution convergence of the four core discretizations.

Poisson (the potential solve), scalar advection by solid rotation, the
Cahn-Hilliard chemical-potential operator and steady variable-viscosity
Stokes. Each table lists the L2 error per grid and the observed order.
"""

from ferrosim.mms import CASES, mms

for case in CASES:
    table = mms(case, levels=3)
    print(table.format())
    print("passed" if table.passed else "FAILED")
    print()
