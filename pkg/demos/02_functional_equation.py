"""
The reflection factor
=====================

eta(s) = phi(s) eta(1 - s) relates the two halves of the strip. phi has
modulus one on the critical line, so there it only rotates.
"""

import numpy as np

from etastrip import StripPoint, eta, phi, phi_critical, polar

rng = np.random.default_rng(0)
worst = 0.0
for a, b in zip(rng.uniform(0.02, 0.98, 50), rng.uniform(-60, 60, 50)):
    p = StripPoint(a, b)
    worst = max(worst, abs(eta(p.s).value - phi(p) * eta(p.reflected.s).value))
print("max |eta(s) - phi(s) eta(1-s)| on 50 random points:", worst)

# off the line the modulus drifts away from one
for alpha in (0.2, 0.4, 0.5, 0.6, 0.8):
    print(f"alpha = {alpha}: |phi(alpha + 30i)| = {polar(StripPoint(alpha, 30.0)).modulus:.6f}")

# on the line the product of closed-form factors agrees with the direct route
for beta in (0.0, 7.0, 100.0, 650.0):
    direct = phi(StripPoint(0.5, beta))
    print(f"beta = {beta:6.1f}: relative gap {abs(phi_critical(beta) - direct) / abs(direct):.1e}")
