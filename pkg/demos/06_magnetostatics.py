"""Magnetostatics: the demagnetizing field never exceeds the magnetization.

For h_a = 0 the discrete potential solve gives ||h|| <= ||m|| and
int m.h = -||h||^2 for any m. A uniform applied field with m = 0 is
reproduced exactly. In quasi-equilibrium (m = chi h) demagnetization
weakens h inside a ferrofluid droplet while the induction h + m is
concentrated there.
"""

import numpy as np

from ferrosim import AppliedField, Grid, MaterialParams, solve_potential, solve_potential_qe
from ferrosim.magnetostatics import elliptic_l2_check
from ferrosim.phase_field import droplet

g = Grid(64, 64)
rng = np.random.default_rng(0)
for k in range(3):
    m = rng.standard_normal((2, 64, 64))
    sol = solve_potential(m, AppliedField.zero(), 0.0, g, 1e-12)
    rep = elliptic_l2_check(m, sol, g)
    print(f"random m #{k}: |h|/|m| = {rep['norm_h'] / rep['norm_m']:.4f}, identity gap {rep['identity_gap']:.1e}, CG iterations {sol.iterations}")

sol = solve_potential(g.zeros_vector(), AppliedField("uniform", 1.0, 0.0), 0.0, g, 1e-12)
print(f"uniform applied field, m = 0: max |h - (1, 0)| = {np.max(np.abs(sol.h - np.array([1.0, 0.0])[:, None, None])):.1e}")

p = MaterialParams(tau=None, chi0=2.0)
theta = droplet(g, p)
sol, m = solve_potential_qe(theta, p, AppliedField("uniform", 0.0, 1.0), 0.0, g, 1e-12, precondition="dct")
inside = theta > 0.9
print(f"quasi-equilibrium droplet (chi0 = {p.chi0}): mean h_y inside {sol.h[1][inside].mean():.4f}, far field {sol.h[1][5, 5]:.4f}")
b = sol.h + m
print(f"  induction (h + m)_y inside {b[1][inside].mean():.4f}, far field {b[1][5, 5]:.4f}; {sol.iterations} DCT-preconditioned CG iterations")
