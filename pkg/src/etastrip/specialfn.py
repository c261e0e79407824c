"""Complex special-function kernel: Gamma, log-Gamma, Riemann-Siegel theta,
and the angle utilities used for all mod-2pi bookkeeping.

Angles are plain floats in radians. "Principal" always means the half-open
range (-pi, pi].
"""

from __future__ import annotations

import cmath
import math
from typing import List

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, PoleError

__all__ = [
    "arctan2",
    "normalize_angle",
    "circular_distance",
    "log_gamma",
    "gamma",
    "riemann_siegel_theta",
    "riemann_siegel_theta_roots",
]

PI = math.pi
TWO_PI = 2.0 * math.pi
HALF_LOG_TWO_PI = 0.5 * math.log(TWO_PI)
LOG_PI = math.log(math.pi)

# Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
# Relative error below 1e-15 on the closed right half-plane Re z >= 1/2.
LANCZOS_G = 607.0 / 128.0
LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


# ---------------------------------------------------------------------------
# Angles
# ---------------------------------------------------------------------------

def arctan2(a: float, b: float) -> float:
    """Principal argument of the complex number ``a + ib``.

    Note the argument order: ``a`` is the real part and ``b`` the imaginary
    part, the reverse of :func:`math.atan2`. The result lies in (-pi, pi];
    the negative real axis (``a < 0, b = 0``) maps to +pi.

    Raises:
        DomainError: if ``a == b == 0``.
    """
    if a == 0.0 and b == 0.0:
        raise DomainError("arctan2 is undefined at a = b = 0")
    if a > 0.0:
        return math.atan(b / a)
    if a < 0.0:
        base = math.atan(b / a)
        if b >= 0.0:
            return base + PI
        angle = base - PI
        # tiny negative b / a rounds onto -pi, which the range excludes
        return angle if angle > -PI else PI
    return -0.5 * PI if b < 0.0 else 0.5 * PI


def normalize_angle(x: float) -> float:
    """Reduce ``x`` modulo 2pi into (-pi, pi]."""
    if not math.isfinite(x):
        raise DomainError(f"cannot normalize non-finite angle {x!r}")
    r = math.remainder(x, TWO_PI)
    if r <= -PI:
        r += TWO_PI
    elif r > PI:
        r -= TWO_PI
    return r


def circular_distance(x: float, y: float) -> float:
    """Distance between two angles on the circle, in [0, pi]."""
    return abs(normalize_angle(x - y))


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

def _as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def _lanczos_log_gamma(z: complex) -> complex:
    # valid for Re z >= 1/2
    w = z - 1.0
    acc = LANCZOS_COEF[0]
    for k in range(1, len(LANCZOS_COEF)):
        acc += LANCZOS_COEF[k] / (w + k)
    t = w + LANCZOS_G + 0.5
    return HALF_LOG_TWO_PI + (w + 0.5) * cmath.log(t) - t + cmath.log(acc)


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z) on the open right half-plane.

    The branch is the one that is real on the positive axis and continuous
    for Re z > 0, so ``log_gamma(z).imag`` is a continuous argument of
    Gamma(z) rather than a value reduced into (-pi, pi].

    Raises:
        DomainError: for Re z <= 0; use :func:`gamma` there.
    """
    z = _as_complex(z)
    if z.real <= 0.0:
        raise DomainError(f"log_gamma requires Re z > 0, got {z!r}")
    if z.real >= 0.5:
        return _lanczos_log_gamma(z)
    # log z is continuous on the right half-plane, so the shift keeps the branch
    return _lanczos_log_gamma(z + 1.0) - cmath.log(z)


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def gamma(z) -> complex:
    """Gamma function on the complex plane minus its poles.

    Uses the Lanczos sum for Re z >= 1/2 and the reflection formula
    Gamma(z) Gamma(1 - z) = pi / sin(pi z) elsewhere.

    Raises:
        PoleError: at z = 0, -1, -2, ...
    """
    z = _as_complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real >= 0.5:
        return cmath.exp(_lanczos_log_gamma(z))
    return PI / (cmath.sin(PI * z) * cmath.exp(_lanczos_log_gamma(1.0 - z)))


# ---------------------------------------------------------------------------
# Riemann-Siegel theta
# ---------------------------------------------------------------------------

def riemann_siegel_theta(t: float) -> float:
    """Continuous Riemann-Siegel theta, arg Gamma(1/4 + it/2) - (t/2) log pi.

    The value is not reduced modulo 2pi. ``1/4 + it/2`` stays in the right
    half-plane, so the log-Gamma branch makes the result continuous in ``t``
    with theta(0) = 0.
    """
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"riemann_siegel_theta needs finite t, got {t!r}")
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * LOG_PI


def riemann_siegel_theta_roots(lo: float, hi: float, step: float = 0.01,
                               xtol: float = 1e-13) -> List[float]:
    """All roots of theta on [lo, hi] located by sign changes on a grid.

    Grid points where theta is exactly zero are returned as roots directly.
    Roots closer together than ``step`` can be missed.
    """
    if not hi > lo:
        raise DomainError(f"empty interval [{lo}, {hi}]")
    if step <= 0.0:
        raise DomainError("step must be positive")
    n = int(math.ceil((hi - lo) / step))
    ts = lo + step * np.arange(n + 1)
    ts[-1] = hi
    vals = [riemann_siegel_theta(t) for t in ts]
    roots = []
    for i in range(n + 1):
        if vals[i] == 0.0:
            roots.append(float(ts[i]))
        elif i < n and vals[i] * vals[i + 1] < 0.0:
            roots.append(brentq(riemann_siegel_theta, ts[i], ts[i + 1], xtol=xtol))
    return roots
