"""Zeros of eta on the critical line and per-zero diagnostics.

Zeros are bracketed by sign changes of the real function

    Z(t) = Re(exp(i theta(t)) * zeta(1/2 + it)),   zeta = eta / (1 - 2^(1-s)),

then refined with Brent's method. The factor 1 - 2^(1-s) has no zeros on the
critical line, so every zero of Z is a zero of eta.
"""

from __future__ import annotations

import cmath
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NoSignChangeError, RealnessViolation
from .eta import DEFAULT_TOL, StripPoint, eta, zeta_from_eta
from .funceq import THETA_TOL, omega_membership, omega_residual, polar, theta_is_nonzero
from .specialfn import riemann_siegel_theta

__all__ = [
    "ScanConfig",
    "ZeroRecord",
    "ZERO_RECORD_FIELDS",
    "hardy_like",
    "scan",
    "refine",
    "analyze_zero",
    "find_zeros",
]

# below this |Z| without a sign change the step is halved locally
TANGENCY_LEVEL = 1e-3
TANGENCY_DEPTH = 4

ZERO_RECORD_FIELDS = (
    "beta", "eta_abs", "omega_r1", "omega_r2", "theta",
    "theta_nonzero", "eq8_abs", "bracket_lo", "bracket_hi",
)


@dataclass(frozen=True)
class ScanConfig:
    t_lo: float
    t_hi: float
    step: float = 0.02
    refine_tol: float = 1e-9
    series_tol: float = DEFAULT_TOL

    def __post_init__(self):
        for name in ("t_lo", "t_hi", "step", "refine_tol", "series_tol"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if not self.t_lo < self.t_hi:
            raise DomainError(f"need t_lo < t_hi, got [{self.t_lo}, {self.t_hi}]")
        if self.step <= 0.0:
            raise DomainError("step must be positive")
        if self.refine_tol <= 0.0 or self.series_tol <= 0.0:
            raise DomainError("tolerances must be positive")


@dataclass(frozen=True)
class ZeroRecord:
    """A refined zero 1/2 + i beta with its zero-condition diagnostics.

    ``omega_r1``/``omega_r2`` are |x - u| and |y + v|, ``theta`` the principal
    argument of phi at the zero and ``eq8_abs`` the modulus of the Omega
    series there.
    """

    beta: float
    eta_abs: float
    omega_r1: float
    omega_r2: float
    theta: float
    theta_nonzero: bool
    eq8_abs: float
    bracket: Tuple[float, float]

    def as_row(self) -> dict:
        row = asdict(self)
        lo, hi = row.pop("bracket")
        row["bracket_lo"] = lo
        row["bracket_hi"] = hi
        return {k: row[k] for k in ZERO_RECORD_FIELDS}


def hardy_like(t: float, tol: float = DEFAULT_TOL) -> float:
    """Re(exp(i theta(t)) zeta(1/2 + it)), checked to be real.

    Raises:
        RealnessViolation: if the imaginary part exceeds 10 * tol.
    """
    z = zeta_from_eta(complex(0.5, t), tol)
    rotated = cmath.exp(1j * riemann_siegel_theta(t)) * z.value
    if abs(rotated.imag) > 10.0 * tol:
        raise RealnessViolation(
            f"Im part {rotated.imag:.3e} at t={t} exceeds {10.0 * tol:.1e}")
    return rotated.real


def _eval_chunk(ts: Sequence[float], tol: float) -> List[float]:
    return [hardy_like(float(t), tol) for t in ts]


def _evaluate(ts: np.ndarray, tol: float, jobs: Optional[int]) -> np.ndarray:
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(ts) < 200:
        return np.array(_eval_chunk(ts, tol))
    chunks = np.array_split(ts, jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_eval_chunk, chunks, [tol] * len(chunks))
        return np.concatenate([np.asarray(p, dtype=float) for p in parts])


def _grid(config: ScanConfig) -> np.ndarray:
    n = int(math.ceil((config.t_hi - config.t_lo) / config.step - 1e-9))
    ts = config.t_lo + config.step * np.arange(n + 1)
    ts[-1] = config.t_hi
    return ts


def _split_tangency(a: float, b: float, fa: float, fb: float, tol: float,
                    depth: int) -> List[Tuple[float, float]]:
    if depth == 0:
        return []
    m = 0.5 * (a + b)
    fm = hardy_like(m, tol)
    out = []
    for lo, hi, flo, fhi in ((a, m, fa, fm), (m, b, fm, fb)):
        if flo * fhi < 0.0:
            out.append((lo, hi))
        elif min(abs(flo), abs(fhi)) < TANGENCY_LEVEL:
            out.extend(_split_tangency(lo, hi, flo, fhi, tol, depth - 1))
    return out


def scan(config: ScanConfig, jobs: Optional[int] = 1) -> List[Tuple[float, float]]:
    """Sign-change brackets of :func:`hardy_like` on the configured grid.

    Intervals without a sign change whose endpoint values dip below
    ``TANGENCY_LEVEL`` are bisected up to ``TANGENCY_DEPTH`` times to catch
    closely spaced zero pairs. A grid point where Z is exactly zero yields a
    degenerate bracket (t, t). The result is ordered by t and does not depend
    on ``jobs``.
    """
    ts = _grid(config)
    fs = _evaluate(ts, config.series_tol, jobs)
    brackets = []
    for i in range(len(ts) - 1):
        a, b, fa, fb = float(ts[i]), float(ts[i + 1]), fs[i], fs[i + 1]
        if fa == 0.0:
            brackets.append((a, a))
        elif fa * fb < 0.0:
            brackets.append((a, b))
        elif fb != 0.0 and min(abs(fa), abs(fb)) < TANGENCY_LEVEL:
            brackets.extend(_split_tangency(a, b, fa, fb, config.series_tol, TANGENCY_DEPTH))
    if fs[-1] == 0.0:
        brackets.append((float(ts[-1]), float(ts[-1])))
    return brackets


def refine(bracket: Tuple[float, float], refine_tol: float = 1e-9,
           series_tol: float = DEFAULT_TOL) -> float:
    """Zero of :func:`hardy_like` inside ``bracket`` by Brent's method.

    Raises:
        NoSignChangeError: if the endpoint values share a sign.
    """
    a, b = bracket
    if a == b:
        return float(a)
    fa, fb = hardy_like(a, series_tol), hardy_like(b, series_tol)
    if fa == 0.0:
        return float(a)
    if fb == 0.0:
        return float(b)
    if fa * fb > 0.0:
        raise NoSignChangeError(f"no sign change on [{a}, {b}]: Z = {fa:.3e}, {fb:.3e}")
    return float(brentq(hardy_like, a, b, args=(series_tol,), xtol=refine_tol, rtol=4 * np.finfo(float).eps))


def analyze_zero(beta: float, series_tol: float = DEFAULT_TOL,
                 bracket: Optional[Tuple[float, float]] = None,
                 theta_tol: float = THETA_TOL) -> ZeroRecord:
    """Evaluate eta, Omega membership, theta and the Omega series at 1/2 + i beta."""
    point = StripPoint(0.5, beta)
    member = omega_membership(point, series_tol)
    theta = polar(point).arg
    return ZeroRecord(
        beta=float(beta),
        eta_abs=abs(eta(point.s, series_tol).value),
        omega_r1=member.r1,
        omega_r2=member.r2,
        theta=theta,
        theta_nonzero=theta_is_nonzero(theta, theta_tol),
        eq8_abs=abs(omega_residual(point, series_tol).value),
        bracket=bracket if bracket is not None else (float(beta), float(beta)),
    )


def find_zeros(config: ScanConfig, jobs: Optional[int] = 1) -> List[ZeroRecord]:
    """Scan, refine and analyze every zero in [t_lo, t_hi], ascending."""
    records = []
    for br in scan(config, jobs):
        beta = refine(br, config.refine_tol, config.series_tol)
        records.append(analyze_zero(beta, config.series_tol, bracket=br))
    return records
