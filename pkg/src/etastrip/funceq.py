"""The functional-equation factor phi(s) with eta(s) = phi(s) eta(1 - s),
its polar decomposition, the rotation-matrix form of the equation, the
Omega residual, and the closed forms of phi on the critical line.

Sign convention: the factor that actually satisfies the functional
equation is

    phi(s) = 2 (2^(s-1) - 1) / (1 - 2^s) * pi^(s-1) * sin(pi s / 2) * Gamma(1 - s),

which equals 1 at s = 1/2. The frequently printed variant with
(1 - 2^(s-1)) in the numerator is its negative; it is available as
:func:`phi_literal` so reports can show the difference.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import OverflowGuardError, UndefinedPolarError
from .eta import (
    DEFAULT_TOL,
    EtaComponents,
    StripPoint,
    _rounding_floor,
    _signed_weights,
    eta,
    eta_components,
    terms_for,
    truncation_bound,
)
from .specialfn import (
    arctan2,
    circular_distance,
    log_gamma,
    normalize_angle,
    riemann_siegel_theta,
)

__all__ = [
    "MAX_BETA",
    "THETA_TOL",
    "PolarForm",
    "ArgBreakdown",
    "OmegaResidual",
    "OmegaMembership",
    "RotationForm",
    "phi",
    "phi_literal",
    "polar",
    "phi_critical",
    "gamma_half_line",
    "pi_power",
    "pi_power_closed",
    "two_ratio",
    "two_ratio_closed",
    "varpi_arctan",
    "g_function",
    "arg_breakdown",
    "theta_from_g",
    "theta_is_nonzero",
    "omega_residual",
    "omega_membership",
    "build_rotation",
    "apply_forward",
    "apply_inverse",
]

MAX_BETA = 700.0
THETA_TOL = 1e-6

LN2 = math.log(2.0)
LN_PI = math.log(math.pi)
LN_2PI = math.log(2.0 * math.pi)
SQRT2 = math.sqrt(2.0)
SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class PolarForm:
    """phi = modulus * exp(i * arg), arg principal in (-pi, pi]."""

    modulus: float
    arg: float

    @property
    def phi1(self) -> float:
        return self.modulus * math.cos(self.arg)

    @property
    def phi2(self) -> float:
        return self.modulus * math.sin(self.arg)

    def to_complex(self) -> complex:
        return cmath.rect(self.modulus, self.arg)


@dataclass(frozen=True)
class ArgBreakdown:
    """Arguments of the factors of phi(1/2 + i beta).

    ``varpi`` is the principal argument of the 2-power ratio, taken with
    :func:`arctan2`; ``varpi_arctan`` is the single-arctan expression, which
    drops the quadrant whenever the ratio has negative real part.
    ``theta_sum`` is the reduced sum beta ln pi + varpi + phi_arg + psi and
    ``theta_g`` the reduced value of 2 (g - theta_rs).
    """

    beta: float
    varpi: float
    varpi_arctan: float
    phi_arg: float
    psi: float
    g: float
    theta_rs: float
    theta_sum: float
    theta_g: float


@dataclass(frozen=True)
class OmegaResidual:
    """Accelerated sum of the Omega series and its closed-form reduction."""

    value: complex
    error_bound: float
    terms_used: int
    closed_form: complex
    closed_form_error: float
    rho_squared: float

    @property
    def route_difference(self) -> float:
        return abs(self.value - self.closed_form)


@dataclass(frozen=True)
class OmegaMembership:
    r1: float
    r2: float
    member: bool
    components: EtaComponents


@dataclass(frozen=True)
class RotationForm:
    """A = rho B, B the rotation by theta, and det(I - B) = -2 (cos theta - 1)."""

    A: np.ndarray
    B: np.ndarray
    rho: float
    theta: float
    fixed_point_det: float


def _as_point(point) -> StripPoint:
    return point if isinstance(point, StripPoint) else StripPoint.from_complex(point)


def _log_sin(w: complex) -> complex:
    # log sin(w) up to 2 pi i, stable for large |Im w|
    if abs(w.imag) < 20.0:
        return cmath.log(cmath.sin(w))
    if w.imag > 0.0:
        # sin w = (i/2) e^{-iw} (1 - e^{2iw})
        return cmath.log(0.5j) - 1j * w + cmath.log(1.0 - cmath.exp(2j * w))
    return cmath.log(-0.5j) + 1j * w + cmath.log(1.0 - cmath.exp(-2j * w))


def _phi(point: StripPoint, sign: float) -> complex:
    s = point.s
    ratio = 2.0 * (cmath.exp((s - 1.0) * LN2) - 1.0) / (1.0 - cmath.exp(s * LN2))
    log_rest = (s - 1.0) * LN_PI + _log_sin(0.5 * math.pi * s) + log_gamma(1.0 - s)
    return sign * ratio * cmath.exp(log_rest)


def phi(point) -> complex:
    """Factor phi(s) with eta(s) = phi(s) eta(1 - s) on the strip.

    The sine and Gamma factors are combined in log space so that the product
    stays finite at large ordinates where each factor alone overflows.
    """
    return _phi(_as_point(point), 1.0)


def phi_literal(point) -> complex:
    """The variant with (1 - 2^(s-1)) in the numerator; equals -phi(s)."""
    return _phi(_as_point(point), -1.0)


def polar(point) -> PolarForm:
    """Modulus and principal argument of phi(s)."""
    value = phi(point)
    if value == 0:
        raise UndefinedPolarError(f"phi vanishes at {point}")
    return PolarForm(abs(value), arctan2(value.real, value.imag))


# ---------------------------------------------------------------------------
# Critical-line closed forms
# ---------------------------------------------------------------------------

def _guard(beta: float) -> float:
    beta = float(beta)
    if not math.isfinite(beta) or abs(beta) > MAX_BETA:
        raise OverflowGuardError(f"|beta| must be <= {MAX_BETA:g}, got {beta!r}")
    return beta


def _log_sqrt_cosh(y: float) -> float:
    y = abs(y)
    return 0.5 * (y + math.log1p(math.exp(-2.0 * y)) - LN2)


def pi_power(beta: float) -> complex:
    """pi^(i beta - 1/2) by complex exponentiation."""
    return cmath.exp(complex(-0.5, beta) * LN_PI)


def pi_power_closed(beta: float) -> complex:
    """pi^(i beta - 1/2) as (cos(beta ln pi) + i sin(beta ln pi)) / sqrt(pi)."""
    a = beta * LN_PI
    return complex(math.cos(a), math.sin(a)) / SQRT_PI


def two_ratio(beta: float) -> complex:
    """(2^(i beta - 1/2) - 1) / (2^(i beta + 1/2) - 1) by complex arithmetic."""
    c = cmath.exp(1j * beta * LN2)
    return (c / SQRT2 - 1.0) / (c * SQRT2 - 1.0)


def two_ratio_closed(beta: float) -> complex:
    """The same ratio through its real and imaginary parts in cos/sin(beta ln 2)."""
    x = beta * LN2
    c, s = math.cos(x), math.sin(x)
    den = c - 0.75 * SQRT2
    return complex(0.75 * (c - 2.0 * SQRT2 / 3.0) / den, -0.25 * s / den)


def varpi_arctan(beta: float) -> float:
    """-arctan((1/3) sin(beta ln 2) / (cos(beta ln 2) - (2/3) sqrt 2))."""
    x = beta * LN2
    s = math.sin(x)
    den = math.cos(x) - 2.0 * SQRT2 / 3.0
    q = s / (3.0 * den) if den != 0.0 else math.copysign(math.inf, s)
    return -math.atan(q)


def g_function(beta: float) -> float:
    """g(beta) = -(beta ln 2 + arctan(...)) / 2; odd in beta."""
    return 0.5 * (varpi_arctan(beta) - beta * LN2)


def _gamma_half_line_parts(beta: float) -> tuple:
    # (log modulus, argument) of Gamma(1/2 - i beta)
    phase = 2.0 * riemann_siegel_theta(beta) + beta * LN_2PI + math.atan(math.tanh(0.5 * math.pi * beta))
    return 0.5 * LN_PI - _log_sqrt_cosh(math.pi * beta), -phase


def gamma_half_line(beta: float) -> complex:
    """Gamma(1/2 - i beta) from theta:

    sqrt(pi) exp(-i (2 theta(beta) + beta ln 2pi + arctan tanh(pi beta / 2))) / sqrt(cosh pi beta).
    """
    log_mod, arg = _gamma_half_line_parts(_guard(beta))
    return cmath.exp(complex(log_mod, arg))


def phi_critical(beta: float) -> complex:
    """phi(1/2 + i beta) as the product of its closed-form factors.

    Factors: sqrt 2, pi^(i beta - 1/2), the 2-power ratio, cosh + i sinh of
    pi beta / 2, and Gamma(1/2 - i beta); times -1 for the sign convention
    described in the module docstring. cosh/sinh are carried with an
    exponent so the product stays finite up to ``MAX_BETA``.
    """
    beta = _guard(beta)
    x = 0.5 * math.pi * beta
    ax = abs(x)
    # cosh x + i sinh x = e^|x| / 2 * mantissa
    tail = math.exp(-2.0 * ax)
    mantissa = complex(1.0 + tail, math.copysign(1.0 - tail, x))
    log_scale = ax - LN2
    log_mod, arg = _gamma_half_line_parts(beta)
    # the growth of cosh/sinh cancels against the decay of Gamma
    hyper_gamma = mantissa * cmath.exp(complex(log_scale + log_mod, arg))
    return -SQRT2 * pi_power_closed(beta) * two_ratio_closed(beta) * hyper_gamma


def arg_breakdown(beta: float) -> ArgBreakdown:
    """Argument of each factor of phi(1/2 + i beta) and the two sums."""
    beta = float(beta)
    ratio = two_ratio(beta)
    varpi = arctan2(ratio.real, ratio.imag)
    phi_arg = math.atan(math.tanh(0.5 * math.pi * beta))
    theta_rs = riemann_siegel_theta(beta)
    psi = -(2.0 * theta_rs + beta * LN_2PI + phi_arg)
    g = g_function(beta)
    return ArgBreakdown(
        beta=beta,
        varpi=varpi,
        varpi_arctan=varpi_arctan(beta),
        phi_arg=phi_arg,
        psi=psi,
        g=g,
        theta_rs=theta_rs,
        theta_sum=normalize_angle(beta * LN_PI + varpi + phi_arg + psi),
        theta_g=normalize_angle(2.0 * (g - theta_rs)),
    )


def theta_from_g(beta: float) -> float:
    """normalize_angle(2 (g(beta) - theta(beta)))."""
    return normalize_angle(2.0 * (g_function(beta) - riemann_siegel_theta(beta)))


def theta_is_nonzero(theta: float, theta_tol: float = THETA_TOL) -> bool:
    """True when theta is farther than ``theta_tol`` from 0 modulo 2pi."""
    return circular_distance(theta, 0.0) > theta_tol


# ---------------------------------------------------------------------------
# Omega
# ---------------------------------------------------------------------------

def omega_residual(point, tol: float = DEFAULT_TOL) -> OmegaResidual:
    """Sum over n of (-1)^(n-1) n^-a (1 - n^(2a-1) rho^2) exp(i b ln n).

    rho^2 = |phi(s)|^2 is fixed once for all terms. The same quantity equals
    conj(eta(s)) - rho^2 eta(1 - s); that reduction is evaluated by two
    separate eta calls and returned alongside.
    """
    point = _as_point(point)
    s, r = point.s, point.reflected.s
    rho2 = abs(phi(point)) ** 2
    n = max(terms_for(s, 0.25 * tol), terms_for(r, 0.25 * tol / max(rho2, 1.0)))
    logk = np.log(np.arange(1, n + 1, dtype=float))
    weights = _signed_weights(n)
    factor = 1.0 - np.exp((2.0 * point.alpha - 1.0) * logk) * rho2
    terms = weights * np.exp(-point.alpha * logk) * factor * np.exp(1j * point.beta * logk)
    floor = _rounding_floor(terms)
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    bound = truncation_bound(s, n) + rho2 * truncation_bound(r, n) + floor

    near = eta(s, 0.5 * tol)
    far = eta(r, 0.5 * tol / max(rho2, 1.0))
    closed = near.value.conjugate() - rho2 * far.value
    return OmegaResidual(
        value=value,
        error_bound=bound,
        terms_used=n,
        closed_form=closed,
        closed_form_error=near.error_bound + rho2 * far.error_bound,
        rho_squared=rho2,
    )


def omega_membership(point, tol: float = DEFAULT_TOL) -> OmegaMembership:
    """Residuals |x - u| and |y + v|; member when both are below ``tol``."""
    comps = eta_components(_as_point(point), tol)
    r1 = abs(comps.x - comps.u)
    r2 = abs(comps.y + comps.v)
    return OmegaMembership(r1, r2, r1 < tol and r2 < tol, comps)


# ---------------------------------------------------------------------------
# Rotation form
# ---------------------------------------------------------------------------

def build_rotation(point) -> RotationForm:
    """Matrices mapping (u, v) to (x, y) (A) and to (x, y) / rho (B)."""
    pf = polar(point)
    c, s = math.cos(pf.arg), math.sin(pf.arg)
    B = np.array([[c, -s], [s, c]])
    return RotationForm(
        A=pf.modulus * B,
        B=B,
        rho=pf.modulus,
        theta=pf.arg,
        fixed_point_det=-2.0 * (c - 1.0),
    )


def apply_forward(rot: RotationForm, u: float, v: float) -> tuple:
    """(x, y) = A (u, v)."""
    x, y = rot.A @ np.array([u, v])
    return float(x), float(y)


def apply_inverse(rot: RotationForm, x: float, y: float) -> tuple:
    """(u, v) from (x, y) through the explicit inverse in phi1, phi2, rho^2."""
    rho2 = rot.rho ** 2
    phi1 = float(rot.A[0, 0])
    phi2 = float(rot.A[1, 0])
    u = x / rho2 * phi1 + y / rho2 * phi2
    v = -x / rho2 * phi2 + y / rho2 * phi1
    return u, v
