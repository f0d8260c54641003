"""Vanishing susceptibility floor: delta -> 0, including delta = 0 itself.

The non-magnetic phase has chi = delta. As delta shrinks the solutions
settle, so successive differences of the final phase field contract. The
delta = 0 run exercises the asymptotic branches of 1/chi and chi'/chi^2.
"""

import math

from ferrosim import default_config
from ferrosim.sweeps import sweep_delta

cfg = default_config(64, 64, 0.5, **{"time.dt": 1e-3})
res = sweep_delta(cfg, [1e-2, 1e-4, 1e-6, 0.0])

print(f"{'delta':>8} {'theta diff':>12} {'E_total':>12} {'max|psi|':>10} {'finite':>7}")
for row in res.rows:
    diff = "-" if math.isnan(row.defect) else f"{row.defect:.4e}"
    print(f"{row.param:8.0e} {diff:>12} {row.extra['E_total']:12.6f} {row.extra['max_psi']:10.4f} {row.extra['finite']!s:>7}")
