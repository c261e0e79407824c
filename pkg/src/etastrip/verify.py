"""Catalog of identities checked by two independent routes over grids.

Each catalog entry names the identity, its grid domain, the residual metric
and a default threshold. Angle identities are compared on the circle.
Entries flagged ``report_only`` are measured and reported per grid point but
never fail a run: their branch conventions are not pinned down well enough
to serve as oracles.
"""

from __future__ import annotations

import cmath
import datetime as _dt
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import __version__
from .errors import DomainError, EtaStripError
from .eta import DEFAULT_TOL, StripPoint, eta, zeta_from_eta
from .funceq import (
    arg_breakdown,
    g_function,
    gamma_half_line,
    omega_residual,
    phi,
    phi_critical,
    phi_literal,
    pi_power,
    pi_power_closed,
    polar,
    theta_from_g,
    two_ratio,
    two_ratio_closed,
)
from .specialfn import (
    arctan2,
    circular_distance,
    gamma,
    riemann_siegel_theta,
    riemann_siegel_theta_roots,
)

__all__ = [
    "DEFAULT_SEED",
    "SEED_ENV",
    "CATALOG",
    "IDENTITY_IDS",
    "Identity",
    "GridSpec",
    "IdentityResult",
    "VerificationReport",
    "grid_for",
    "run_identity",
    "run_all",
    "published_figures",
]

DEFAULT_SEED = 20240917
SEED_ENV = "ETASTRIP_SEED"

PUBLISHED_ETA_HALF = 0.60440
PUBLISHED_THETA_ROOT = 17.8455995405
PUBLISHED_G_AT_ROOT = -4.8774


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    n_beta: int = 500
    beta_lo: float = 0.05
    beta_hi: float = 60.0
    n_strip: int = 200
    strip_beta_max: float = 60.0
    strip_alpha_lo: float = 0.02
    strip_alpha_hi: float = 0.98
    n_xi: int = 100
    xi_im_max: float = 30.0
    root_lo: float = -20.0
    root_hi: float = 20.0
    root_step: float = 0.01
    seed: int = DEFAULT_SEED
    series_tol: float = DEFAULT_TOL

    @classmethod
    def from_env(cls, **overrides) -> "GridSpec":
        """Defaults with the seed taken from ``ETASTRIP_SEED`` when set."""
        raw = os.environ.get(SEED_ENV)
        if raw is not None and "seed" not in overrides:
            try:
                overrides["seed"] = int(raw)
            except ValueError:
                raise DomainError(f"{SEED_ENV} must be an integer, got {raw!r}") from None
        return cls(**overrides)

    def beta_grid(self) -> List[float]:
        return [float(b) for b in np.linspace(self.beta_lo, self.beta_hi, self.n_beta)]

    def _random_draws(self):
        rng = np.random.default_rng(self.seed)
        alpha = rng.uniform(self.strip_alpha_lo, self.strip_alpha_hi, self.n_strip)
        beta = rng.uniform(-self.strip_beta_max, self.strip_beta_max, self.n_strip)
        xi_re = rng.uniform(0.01, 0.99, self.n_xi)
        xi_im = rng.uniform(-self.xi_im_max, self.xi_im_max, self.n_xi)
        return alpha, beta, xi_re, xi_im

    def strip_grid(self) -> List[complex]:
        alpha, beta, _, _ = self._random_draws()
        return [complex(a, b) for a, b in zip(alpha, beta)]

    def xi_grid(self) -> List[complex]:
        _, _, re, im = self._random_draws()
        return [complex(a, b) for a, b in zip(re, im)]


# ---------------------------------------------------------------------------
# Residuals
# ---------------------------------------------------------------------------

def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / abs(b)


def _scaled(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def _func_eq(p: complex, tol: float) -> float:
    point = StripPoint.from_complex(p)
    lhs = eta(point.s, tol).value
    return _scaled(lhs, phi(point) * eta(point.reflected.s, tol).value)


def _phi_crit(b: float, tol: float) -> float:
    return _scaled(phi_critical(b), phi(StripPoint(0.5, b)))


def _pi_power(b: float, tol: float) -> float:
    return _scaled(pi_power(b), pi_power_closed(b))


def _two_ratio(b: float, tol: float) -> float:
    return _scaled(two_ratio(b), two_ratio_closed(b))


def _gamma_half(b: float, tol: float) -> float:
    return _rel(gamma_half_line(b), gamma(complex(0.5, -b)))


def _gamma_aux_cos(t: float, tol: float) -> float:
    lhs = cmath.cos(0.5 * math.pi * complex(0.5, t))
    rhs = (math.sqrt(math.cosh(math.pi * t)) / math.sqrt(2.0)
           * cmath.exp(-1j * math.atan(math.tanh(0.5 * math.pi * t))))
    return _rel(rhs, lhs)


def _gamma_aux_polar(t: float, tol: float) -> float:
    lhs = gamma(complex(0.25, 0.5 * t))
    rhs = abs(lhs) * cmath.exp(1j * (riemann_siegel_theta(t) + 0.5 * t * math.log(math.pi)))
    return _rel(rhs, lhs)


def _gamma_aux_dup(xi: complex, tol: float) -> float:
    lhs = gamma(xi) * gamma(xi + 0.5)
    rhs = cmath.exp((1.0 - 2.0 * xi) * math.log(2.0)) * math.sqrt(math.pi) * gamma(2.0 * xi)
    return _rel(lhs, rhs)


def _gamma_aux_refl(xi: complex, tol: float) -> float:
    return abs(gamma(xi) * gamma(1.0 - xi) * cmath.sin(math.pi * xi) / math.pi - 1.0)


def _literal_arg(b: float) -> float:
    v = phi_literal(StripPoint(0.5, b))
    return arctan2(v.real, v.imag)


def _arg_sum(b: float, tol: float) -> float:
    return circular_distance(arg_breakdown(b).theta_sum, polar(StripPoint(0.5, b)).arg)


def _arg_sum_detail(b: float) -> dict:
    ab = arg_breakdown(b)
    return {
        "residual_literal_sign": circular_distance(ab.theta_sum, _literal_arg(b)),
        "theta_sum": ab.theta_sum,
        "varpi": ab.varpi,
        "varpi_arctan": ab.varpi_arctan,
    }


def _theta_g(b: float, tol: float) -> float:
    return circular_distance(theta_from_g(b), polar(StripPoint(0.5, b)).arg)


def _theta_g_detail(b: float) -> dict:
    return {
        "residual_literal_sign": circular_distance(theta_from_g(b), _literal_arg(b)),
        "theta_g": theta_from_g(b),
        "theta_polar": polar(StripPoint(0.5, b)).arg,
        "g": g_function(b),
    }


def _theta_inv(b: float, tol: float) -> float:
    # halving a class mod 2 pi leaves it defined mod pi
    lhs = g_function(b) - 0.5 * theta_from_g(b)
    return 0.5 * circular_distance(2.0 * lhs, 2.0 * riemann_siegel_theta(b))


def _rho_one(b: float, tol: float) -> float:
    return abs(abs(phi(StripPoint(0.5, b))) - 1.0)


def _omega_closed(p: complex, tol: float) -> float:
    return omega_residual(StripPoint.from_complex(p), tol).route_difference


def _odd_g(b: float, tol: float) -> float:
    return abs(g_function(-b) + g_function(b))


def _odd_theta_rs(b: float, tol: float) -> float:
    return abs(riemann_siegel_theta(-b) + riemann_siegel_theta(b))


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    domain: str  # "beta", "strip", "xi" or "interval"
    metric: str  # "scaled", "relative", "absolute", "angle", "roots"
    threshold: float
    residual: Optional[Callable] = None
    report_only: bool = False
    detail: Optional[Callable] = None


CATALOG: Dict[str, Identity] = {
    it.id: it for it in [
        Identity("FUNC_EQ", "eta(s) = phi(s) eta(1-s)", "strip", "scaled", 1e-9, _func_eq),
        Identity("PHI_CRIT", "phi(1/2+ib) as product of closed-form factors",
                 "beta", "scaled", 1e-9, _phi_crit),
        Identity("PI_POWER", "pi^(ib-1/2) = (cos(b ln pi) + i sin(b ln pi))/sqrt(pi)",
                 "beta", "scaled", 1e-9, _pi_power),
        Identity("TWO_RATIO", "(2^(ib-1/2)-1)/(2^(ib+1/2)-1) in cos/sin(b ln 2)",
                 "beta", "scaled", 1e-9, _two_ratio),
        Identity("GAMMA_HALF", "Gamma(1/2-ib) via theta", "beta", "relative", 1e-9, _gamma_half),
        Identity("GAMMA_AUX_COS",
                 "cos(pi z/2) = sqrt(cosh(pi t)/2) exp(-i arctan tanh(pi t/2)), z = 1/2+it",
                 "beta", "relative", 1e-9, _gamma_aux_cos),
        Identity("GAMMA_AUX_POLAR",
                 "Gamma(1/4+it/2) = |Gamma(1/4+it/2)| exp(i(theta(t) + (t/2) ln pi))",
                 "beta", "relative", 1e-9, _gamma_aux_polar),
        Identity("GAMMA_AUX_DUP", "Gamma(x)Gamma(x+1/2) = 2^(1-2x) sqrt(pi) Gamma(2x)",
                 "xi", "relative", 1e-9, _gamma_aux_dup),
        Identity("GAMMA_AUX_REFL", "Gamma(x)Gamma(1-x) = pi / sin(pi x)",
                 "xi", "absolute", 1e-10, _gamma_aux_refl),
        Identity("ARG_SUM", "theta(1/2+ib) = b ln pi + varpi + phi_arg + psi (mod 2pi)",
                 "beta", "angle", 1e-8, _arg_sum, report_only=True, detail=_arg_sum_detail),
        Identity("THETA_G", "theta(1/2+ib) = 2(g(b) - theta_rs(b)) (mod 2pi)",
                 "beta", "angle", 1e-8, _theta_g, report_only=True, detail=_theta_g_detail),
        Identity("THETA_INV", "theta_rs(b) = g(b) - theta/2 (mod pi)",
                 "beta", "angle", 1e-8, _theta_inv),
        Identity("RHO_ONE", "|phi(1/2+ib)| = 1", "beta", "absolute", 1e-10, _rho_one),
        Identity("OMEGA_CLOSED", "Omega series = conj(eta(s)) - rho^2 eta(1-s)",
                 "strip", "absolute", 1e-9, _omega_closed),
        Identity("ODD_G", "g(-b) = -g(b)", "beta", "absolute", 1e-12, _odd_g),
        Identity("ODD_THETA_RS", "theta_rs(-b) = -theta_rs(b)",
                 "beta", "absolute", 1e-12, _odd_theta_rs),
        Identity("THETA_ROOTS", "roots of theta_rs are 0 and +-17.8455995405",
                 "interval", "roots", 1e-6),
    ]
}

IDENTITY_IDS = tuple(CATALOG)
EXPECTED_THETA_ROOTS = (-PUBLISHED_THETA_ROOT, 0.0, PUBLISHED_THETA_ROOT)


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------

def _encode_point(p):
    if isinstance(p, complex):
        return [p.real, p.imag]
    return p


def _decode_point(p):
    if isinstance(p, list):
        return complex(p[0], p[1])
    return p


@dataclass
class IdentityResult:
    """Aggregated residuals of one identity over its grid.

    ``failures`` lists every grid point above ``threshold``; points whose
    evaluation raised are in ``errors`` instead. ``values`` holds per-point
    measurements for report-only identities.
    """

    id: str
    statement: str
    metric: str
    report_only: bool
    threshold: float
    grid_size: int
    max_residual: float
    worst_point: object
    passed: bool
    failures: List[list] = field(default_factory=list)
    errors: List[list] = field(default_factory=list)
    values: List[dict] = field(default_factory=list)
    extra: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["worst_point"] = _encode_point(self.worst_point)
        d["failures"] = [[_encode_point(p), r] for p, r in self.failures]
        d["errors"] = [[_encode_point(p), m] for p, m in self.errors]
        d["values"] = [{**v, "point": _encode_point(v["point"])} for v in self.values]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityResult":
        d = dict(d)
        d["worst_point"] = _decode_point(d["worst_point"])
        d["failures"] = [[_decode_point(p), r] for p, r in d["failures"]]
        d["errors"] = [[_decode_point(p), m] for p, m in d["errors"]]
        d["values"] = [{**v, "point": _decode_point(v["point"])} for v in d["values"]]
        return cls(**d)


@dataclass
class VerificationReport:
    timestamp: str
    tool_version: str
    config: dict
    results: List[IdentityResult]
    published_figures: dict
    verdict: str

    def to_dict(self) -> dict:
        return {
            "timestamp": self.timestamp,
            "tool_version": self.tool_version,
            "config": self.config,
            "results": [r.to_dict() for r in self.results],
            "published_figures": self.published_figures,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            timestamp=d["timestamp"],
            tool_version=d["tool_version"],
            config=d["config"],
            results=[IdentityResult.from_dict(r) for r in d["results"]],
            published_figures=d["published_figures"],
            verdict=d["verdict"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def result(self, identity: str) -> IdentityResult:
        for r in self.results:
            if r.id == identity:
                return r
        raise KeyError(identity)


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------

def grid_for(identity: str, spec: GridSpec) -> list:
    domain = CATALOG[identity].domain
    if domain == "beta":
        return spec.beta_grid()
    if domain == "strip":
        return spec.strip_grid()
    if domain == "xi":
        return spec.xi_grid()
    return [spec.root_lo, spec.root_hi]


def _run_roots(ident: Identity, grid: Sequence[float], threshold: float,
               spec: GridSpec) -> IdentityResult:
    lo, hi = grid
    expected = [r for r in EXPECTED_THETA_ROOTS if lo <= r <= hi]
    found = riemann_siegel_theta_roots(lo, hi, spec.root_step)
    failures, values = [], []
    residuals = []
    for root in found:
        dist = min((abs(root - e) for e in expected), default=math.inf)
        values.append({"point": root, "residual": dist})
        residuals.append(dist)
        if dist > threshold:
            failures.append([root, dist])
    errors = []
    for e in expected:
        if not any(abs(root - e) <= threshold for root in found):
            errors.append([e, "expected root not found"])
    worst = int(np.argmax(residuals)) if residuals else None
    max_res = residuals[worst] if residuals else 0.0
    if math.isinf(max_res):
        max_res = None
    return IdentityResult(
        id=ident.id, statement=ident.statement, metric=ident.metric,
        report_only=ident.report_only, threshold=threshold,
        grid_size=len(found), max_residual=max_res,
        worst_point=found[worst] if residuals else None,
        passed=not failures and not errors and len(found) == len(expected),
        failures=failures, errors=errors, values=values,
        extra={"roots": found, "expected": expected, "step": spec.root_step},
    )


def run_identity(identity: str, grid: Optional[list] = None, threshold: Optional[float] = None,
                 spec: Optional[GridSpec] = None) -> IdentityResult:
    """Evaluate one catalog identity at every grid point.

    Points outside the identity's domain, or where evaluation raises, are
    recorded in ``errors`` and make the result fail; they never abort the run.
    """
    if identity not in CATALOG:
        raise KeyError(f"unknown identity {identity!r}")
    ident = CATALOG[identity]
    spec = spec or GridSpec()
    grid = list(grid) if grid is not None else grid_for(identity, spec)
    threshold = ident.threshold if threshold is None else threshold
    if ident.metric == "roots":
        return _run_roots(ident, grid, threshold, spec)

    failures, errors, values = [], [], []
    max_res, worst = 0.0, None
    for p in grid:
        try:
            r = float(ident.residual(p, spec.series_tol))
            detail = ident.detail(p) if ident.report_only else None
        except EtaStripError as exc:
            errors.append([p, f"{type(exc).__name__}: {exc}"])
            continue
        if not math.isfinite(r):
            errors.append([p, f"non-finite residual {r!r}"])
            continue
        if worst is None or r > max_res:
            max_res, worst = r, p
        if r > threshold:
            failures.append([p, r])
        if detail is not None:
            values.append({"point": p, "residual": r, **detail})

    extra = {}
    if ident.report_only and values:
        literal = [v["residual_literal_sign"] for v in values]
        extra = {
            "max_residual_literal_sign": max(literal),
            "failures_literal_sign": sum(1 for r in literal if r > threshold),
            "points_near_pi": sum(1 for v in values if abs(v["residual"] - math.pi) < 1e-6),
        }
    return IdentityResult(
        id=ident.id, statement=ident.statement, metric=ident.metric,
        report_only=ident.report_only, threshold=threshold, grid_size=len(grid),
        max_residual=max_res, worst_point=worst,
        passed=not failures and not errors,
        failures=failures, errors=errors, values=values, extra=extra,
    )


def _run_job(args) -> IdentityResult:
    identity, threshold, spec = args
    return run_identity(identity, threshold=threshold, spec=spec)


def published_figures(series_tol: float = DEFAULT_TOL) -> dict:
    """Published numeric figures next to the values computed here."""
    eta_half = eta(0.5, series_tol).value.real
    zeta_half = zeta_from_eta(0.5, series_tol).value.real
    roots = riemann_siegel_theta_roots(17.0, 18.5, 0.01)
    root = roots[0] if roots else PUBLISHED_THETA_ROOT
    g_root = g_function(PUBLISHED_THETA_ROOT)
    return {
        "eta_half": {
            "published": PUBLISHED_ETA_HALF,
            "computed": eta_half,
            "zeta_half": zeta_half,
            "difference": eta_half - PUBLISHED_ETA_HALF,
            "discrepancy": abs(eta_half - PUBLISHED_ETA_HALF) > 1e-6,
        },
        "theta_root": {
            "published": PUBLISHED_THETA_ROOT,
            "computed": root,
            "difference": root - PUBLISHED_THETA_ROOT,
        },
        "g_at_theta_root": {
            "published": PUBLISHED_G_AT_ROOT,
            "computed": g_root,
            "difference": g_root - PUBLISHED_G_AT_ROOT,
            "discrepancy": abs(g_root - PUBLISHED_G_AT_ROOT) > 1e-4,
        },
        "phi_half": {
            "phi": phi(StripPoint(0.5, 0.0)).real,
            "phi_literal_sign": phi_literal(StripPoint(0.5, 0.0)).real,
        },
    }


def run_all(spec: Optional[GridSpec] = None, thresholds: Optional[Dict[str, float]] = None,
            identities: Optional[Sequence[str]] = None, jobs: Optional[int] = 1,
            timestamp: Optional[str] = None) -> VerificationReport:
    """Run the requested identities (default: the whole catalog).

    Results come back in catalog order whatever ``jobs`` is. The overall
    verdict is "pass" iff every identity not flagged report-only passed.
    """
    spec = spec or GridSpec.from_env()
    thresholds = dict(thresholds or {})
    ids = list(IDENTITY_IDS) if identities is None else list(identities)
    unknown = [i for i in ids if i not in CATALOG]
    if unknown:
        raise KeyError(f"unknown identities: {', '.join(unknown)}")
    ids = [i for i in IDENTITY_IDS if i in ids]
    jobs_args = [(i, thresholds.get(i), spec) for i in ids]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(ids))) as pool:
            results = list(pool.map(_run_job, jobs_args))
    else:
        results = [_run_job(a) for a in jobs_args]

    hard_ok = all(r.passed for r in results if not r.report_only)
    if timestamp is None:
        timestamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    config = {
        "grid": asdict(spec),
        "identities": ids,
        "thresholds": {r.id: r.threshold for r in results},
    }
    return VerificationReport(
        timestamp=timestamp,
        tool_version=__version__,
        config=config,
        results=results,
        published_figures=published_figures(spec.series_tol),
        verdict="pass" if hard_ok else "fail",
    )
