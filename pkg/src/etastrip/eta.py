"""Dirichlet eta function on Re s > 0 and zeta recovered from it.

The alternating series is summed with the Chebyshev acceleration of Borwein
and Cohen-Villegas-Zagier. For n terms the weights are

    w_k = (d_n - d_k) / d_n,   d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)

and d_n = T_n(3) >= (3 + sqrt 8)^n / 2. Writing eta through its Mellin
integral gives the truncation bound

    |eta(s) - S_n(s)| <= Gamma(sigma) eta(sigma) / (|Gamma(s)| d_n)
                      <= Gamma(sigma) / (|Gamma(s)| d_n),

valid for every sigma = Re s > 0. The weights are built from exact integers
and rounded once, so no error accumulates in a float recursion.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError, FactorZeroError, PoleError
from .specialfn import log_gamma

__all__ = [
    "DEFAULT_TOL",
    "MAX_TERMS",
    "StripPoint",
    "SeriesValue",
    "EtaComponents",
    "acceleration_weights",
    "terms_for",
    "truncation_bound",
    "eta",
    "eta_components",
    "zeta_from_eta",
]

DEFAULT_TOL = 1e-10
MAX_TERMS = 2000
EPS = sys.float_info.epsilon
LOG_GROWTH = math.log(3.0 + math.sqrt(8.0))
# rounding floor multiplier on eps * sum |terms|
ROUNDING_FACTOR = 8.0


@dataclass(frozen=True)
class StripPoint:
    """A point s = alpha + i beta of the open critical strip 0 < alpha < 1."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise DomainError(f"non-finite strip point ({self.alpha}, {self.beta})")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")

    @classmethod
    def from_complex(cls, s) -> "StripPoint":
        s = complex(s)
        return cls(s.real, s.imag)

    @property
    def s(self) -> complex:
        return complex(self.alpha, self.beta)

    @property
    def reflected(self) -> "StripPoint":
        """The point 1 - s."""
        return StripPoint(1.0 - self.alpha, -self.beta)


@dataclass(frozen=True)
class SeriesValue:
    """Value of an accelerated series with its a-posteriori error bound."""

    value: complex
    error_bound: float
    terms_used: int


@dataclass(frozen=True)
class EtaComponents:
    """Real and imaginary parts of eta(s) (x, y) and eta(1 - s) (u, v).

    ``x + iy = eta(s)`` and ``u + iv = eta(1 - s)``; each part carries the
    bound of the series it came from.
    """

    x: float
    y: float
    u: float
    v: float
    x_error: float
    y_error: float
    u_error: float
    v_error: float
    terms_used: int


@lru_cache(maxsize=64)
def acceleration_weights(n: int) -> np.ndarray:
    """Read-only array ``[w_0, ..., w_{n-1}, log d_n]`` for an n-term sum."""
    if n < 1:
        raise ValueError("n must be positive")
    d = []
    term = Fraction(1)  # n * (n-1)!/(n!) = 1 at i = 0
    acc = Fraction(0)
    for i in range(n + 1):
        acc += term
        d.append(acc)
        term = term * 2 * (n + i) * (n - i) / ((2 * i + 1) * (i + 1))
    dn = d[n]
    out = np.empty(n + 1)
    for k in range(n):
        out[k] = float((dn - d[k]) / dn)
    out[n] = math.log(dn.numerator) - math.log(dn.denominator)
    out.setflags(write=False)
    return out


def _log_bound_prefactor(s: complex) -> float:
    # log(Gamma(sigma) / |Gamma(s)|)
    sigma = s.real
    return log_gamma(sigma).real - log_gamma(s).real


def _safety(beta: float) -> float:
    return 1.0 + abs(beta) / 10.0


def truncation_bound(s: complex, n: int) -> float:
    """Truncation bound for n accelerated terms, including the safety factor."""
    s = complex(s)
    log_dn = acceleration_weights(n)[n]
    return _safety(s.imag) * math.exp(_log_bound_prefactor(s) - log_dn)


def terms_for(s: complex, tol: float) -> int:
    """Smallest n whose truncation bound (with safety factor) is <= tol."""
    s = complex(s)
    target = math.log(tol) - math.log(_safety(s.imag)) - _log_bound_prefactor(s)
    # d_n >= (3 + sqrt 8)^n / 2
    n = max(1, int(math.ceil((math.log(2.0) - target) / LOG_GROWTH)))
    if n > MAX_TERMS:
        raise ConvergenceError(
            f"tol={tol:g} at s={s} needs {n} terms, budget is {MAX_TERMS}")
    while n > 1 and truncation_bound(s, n - 1) <= tol:
        n -= 1
    return n


def _check_args(s: complex, tol: float) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"non-finite argument {s!r}")
    if s.real <= 0.0:
        raise DomainError(f"eta series needs Re s > 0, got Re s = {s.real:g}")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    return s


def _signed_weights(n: int) -> np.ndarray:
    w = acceleration_weights(n)[:n].copy()
    w[1::2] *= -1.0
    return w


def _dirichlet_terms(s: complex, n: int) -> np.ndarray:
    # (-1)^k w_k (k+1)^(-s), k = 0..n-1
    logk = np.log(np.arange(1, n + 1, dtype=float))
    return _signed_weights(n) * np.exp(-s * logk)


def _rounding_floor(terms: np.ndarray) -> float:
    return ROUNDING_FACTOR * EPS * float(np.sum(np.abs(terms)))


def _finish(terms: np.ndarray, s: complex, n: int, tol: float) -> SeriesValue:
    floor = _rounding_floor(terms)
    if floor > 0.5 * tol:
        raise ConvergenceError(
            f"tol={tol:g} is below the rounding floor {floor:.2e} at s={s}")
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    return SeriesValue(value, truncation_bound(s, n) + floor, n)


def eta(s, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Dirichlet eta, sum_{n>=1} (-1)^(n-1) n^(-s), for Re s > 0.

    >>> round(eta(1).value.real, 12)
    0.69314718056

    Raises:
        DomainError: for Re s <= 0 or a nonpositive ``tol``.
        ConvergenceError: when ``tol`` needs more than ``MAX_TERMS`` terms or
            is below the floating-point floor of the sum.
    """
    s = _check_args(s, tol)
    n = terms_for(s, 0.5 * tol)
    return _finish(_dirichlet_terms(s, n), s, n, tol)


def eta_components(point: StripPoint, tol: float = DEFAULT_TOL) -> EtaComponents:
    """The four real component series of eta(s) and eta(1 - s).

    Each is summed separately as a real alternating series:
    x = sum c_n n^-a cos(b ln n), y = -sum c_n n^-a sin(b ln n),
    u = sum c_n n^(a-1) cos(b ln n), v = sum c_n n^(a-1) sin(b ln n).
    """
    if not isinstance(point, StripPoint):
        point = StripPoint.from_complex(point)
    _check_args(point.s, tol)
    s, r = point.s, point.reflected.s
    n = max(terms_for(s, 0.5 * tol), terms_for(r, 0.5 * tol))
    w = _signed_weights(n)
    logk = np.log(np.arange(1, n + 1, dtype=float))
    phase = point.beta * logk
    cos, sin = np.cos(phase), np.sin(phase)
    near = w * np.exp(-point.alpha * logk)
    far = w * np.exp(-(1.0 - point.alpha) * logk)
    series = {
        "x": near * cos,
        "y": -near * sin,
        "u": far * cos,
        "v": far * sin,
    }
    floors = {k: _rounding_floor(t) for k, t in series.items()}
    if max(floors.values()) > 0.5 * tol:
        raise ConvergenceError(f"tol={tol:g} is below the rounding floor at s={s}")
    bound_s = truncation_bound(s, n)
    bound_r = truncation_bound(r, n)
    return EtaComponents(
        x=math.fsum(series["x"]),
        y=math.fsum(series["y"]),
        u=math.fsum(series["u"]),
        v=math.fsum(series["v"]),
        x_error=bound_s + floors["x"],
        y_error=bound_s + floors["y"],
        u_error=bound_r + floors["u"],
        v_error=bound_r + floors["v"],
        terms_used=n,
    )


def zeta_from_eta(s, tol: float = DEFAULT_TOL) -> SeriesValue:
    """zeta(s) = eta(s) / (1 - 2^(1-s)) for Re s > 0.

    ``tol`` applies to the returned zeta value; eta is evaluated tighter by
    the factor |1 - 2^(1-s)|.

    Raises:
        PoleError: at s = 1.
        FactorZeroError: where 1 - 2^(1-s) = 0, i.e. s = 1 + 2 pi i k / ln 2.
    """
    s = _check_args(s, tol)
    if s == 1.0:
        raise PoleError("zeta has a simple pole at s = 1")
    factor = 1.0 - cmath.exp((1.0 - s) * math.log(2.0))
    if abs(factor) < 1e-14:
        raise FactorZeroError(f"1 - 2^(1-s) vanishes at s = {s}")
    inner = eta(s, tol * min(1.0, abs(factor)))
    return SeriesValue(inner.value / factor, inner.error_bound / abs(factor),
                       inner.terms_used)
