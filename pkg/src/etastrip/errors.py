"""Exception hierarchy shared by every etastrip module."""


class EtaStripError(Exception):
    """Base class for all errors raised by etastrip."""


class DomainError(EtaStripError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """The argument sits on a pole (Gamma at a nonpositive integer, zeta at 1)."""


class FactorZeroError(DomainError):
    """The factor 1 - 2**(1 - s) vanishes, so zeta cannot be recovered from eta."""


class UndefinedPolarError(DomainError):
    """Polar form requested for a zero complex number."""


class OverflowGuardError(DomainError):
    """Ordinate beyond the range where the closed forms are evaluated."""


class ConvergenceError(EtaStripError, ArithmeticError):
    """Requested tolerance cannot be met within the term budget."""


class NoSignChangeError(EtaStripError, ValueError):
    """A bracket handed to a root refiner does not straddle a sign change."""


class RealnessViolation(EtaStripError, ArithmeticError):
    """The rotated zeta value has an imaginary part above the noise allowance."""
