"""
Splitting the rotation angle
============================

On the critical line phi(1/2 + i beta) = exp(i theta). The angle can be
assembled from the arguments of its factors; this shows where that
bookkeeping lands compared with the directly computed angle.
"""

import cmath

import numpy as np

from etastrip import StripPoint, arg_breakdown, circular_distance, phi, polar
from etastrip.funceq import g_function

for beta in (0.0, 5.0, 10.0, 25.0):
    ab = arg_breakdown(beta)
    direct = polar(StripPoint(0.5, beta)).arg
    print(f"beta = {beta:5.1f}  direct {direct:+.6f}  component sum {ab.theta_sum:+.6f}"
          f"  2(g - theta_rs) {ab.theta_g:+.6f}")

# both assembled angles sit exactly half a turn from the direct one
gaps = [circular_distance(arg_breakdown(b).theta_sum, polar(StripPoint(0.5, b)).arg)
        for b in np.linspace(0.05, 60, 500)]
print("\ncomponent sum vs direct angle: min gap", min(gaps), "max gap", max(gaps))

# i.e. they describe -phi, whose value at 1/2 is -1 rather than +1
print("phi(1/2) =", phi(StripPoint(0.5, 0.0)))
print("arg of -phi(1/2 + 10i):", cmath.phase(-phi(StripPoint(0.5, 10.0))),
      " component sum:", arg_breakdown(10.0).theta_sum)

# the single-arctan form of g loses a quadrant whenever cos(beta ln 2) < 2 sqrt 2 / 3
print("\ng at the positive root of theta_rs:", g_function(17.8455995405))
