"""
Zeros on the critical line
==========================

exp(i theta_rs(t)) zeta(1/2 + it) is real, so its sign changes bracket the
zeros. Each refined zero is then checked for the conditions the rotation
picture predicts: x = u, y = -v and a nonzero rotation angle.
"""

import time

from etastrip import ScanConfig, find_zeros

start = time.perf_counter()
records = find_zeros(ScanConfig(0.0, 60.0))
print(f"{len(records)} zeros on [0, 60] in {time.perf_counter() - start:.2f} s\n")

print(f"{'beta':>18} {'|eta|':>9} {'|x-u|':>9} {'|y+v|':>9} {'theta':>10}")
for r in records:
    print(f"{r.beta:18.12f} {r.eta_abs:9.1e} {r.omega_r1:9.1e} {r.omega_r2:9.1e} {r.theta:+10.6f}")

print("\nrotation angle away from zero at every zero:", all(r.theta_nonzero for r in records))
