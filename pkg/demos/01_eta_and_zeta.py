"""
Eta and zeta inside the critical strip
======================================

The alternating eta series converges for Re s > 0, and dividing by
1 - 2^(1-s) gives zeta there. Below we watch the accelerated sum settle.
"""

import math

from etastrip import eta, zeta_from_eta
from etastrip.eta import terms_for

# closed forms first
print("eta(1)  =", eta(1).value.real, " ln 2     =", math.log(2))
print("eta(2)  =", eta(2).value.real, " pi^2/12  =", math.pi ** 2 / 12)
print("zeta(2) =", zeta_from_eta(2).value.real, " pi^2/6   =", math.pi ** 2 / 6)

# the term count grows slowly with height and with the requested tolerance
for s in (0.5, 0.5 + 14j, 0.5 + 60j):
    counts = [terms_for(s, tol) for tol in (1e-6, 1e-10, 1e-12)]
    print(f"s = {s!s:>10}: terms for tol 1e-6 / 1e-10 / 1e-12 -> {counts}")

# every value carries a bound on its own error
v = eta(0.5 + 14.134725141734693j)
print("\n|eta| at the first zero:", abs(v.value), " bound:", v.error_bound)

# eta(1/2) against the figure 0.60440 that is often quoted
print("\neta(1/2) =", eta(0.5).value.real)
print("zeta(1/2) * (1 - sqrt 2) =", (zeta_from_eta(0.5).value * (1 - math.sqrt(2))).real)
