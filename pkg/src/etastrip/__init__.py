"""Dirichlet eta on the critical strip: series evaluation, the functional
equation factor and its argument bookkeeping, critical-line zeros, and an
identity-verification harness."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConvergenceError,
    DomainError,
    EtaStripError,
    FactorZeroError,
    NoSignChangeError,
    OverflowGuardError,
    PoleError,
    RealnessViolation,
    UndefinedPolarError,
)
from .eta import EtaComponents, SeriesValue, StripPoint, eta, eta_components, zeta_from_eta  # noqa: E402
from .funceq import (  # noqa: E402
    arg_breakdown,
    build_rotation,
    gamma_half_line,
    omega_membership,
    omega_residual,
    phi,
    phi_critical,
    polar,
    theta_from_g,
)
from .specialfn import (  # noqa: E402
    arctan2,
    circular_distance,
    gamma,
    log_gamma,
    normalize_angle,
    riemann_siegel_theta,
)
from .zeros import ScanConfig, ZeroRecord, analyze_zero, find_zeros, hardy_like, refine, scan  # noqa: E402
