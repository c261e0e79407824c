"""Independent reference computations for the test-suite.

Nothing here imports etastrip: zeta comes from Euler-Maclaurin summation,
eta from plain partial sums or from zeta, and zeros from minimizing |eta|
on a dense grid. mpmath provides high-precision spot values.
"""

from __future__ import annotations

import math

import mpmath
import numpy as np
from scipy.optimize import minimize_scalar

# B_2 .. B_20
BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6,
             -3617 / 510, 43867 / 798, -174611 / 330)

# first zeros of zeta on the critical line (mpmath.zetazero, 15 digits)
ZETA_ZEROS = (
    14.1347251417347, 21.0220396387716, 25.0108575801457, 30.4248761258595,
    32.9350615877392, 37.5861781588257, 40.9187190121475, 43.3270732809150,
    48.0051508811672, 49.7738324776723,
)
ETA_HALF = 0.604898643421630370  # mpmath.altzeta(0.5)
ZETA_HALF = -1.460354508809586813  # mpmath.zeta(0.5)
THETA_ROOT = 17.8455995404108608  # mpmath.findroot(siegeltheta, 17.8)


def zeta_em(s, n_terms: int = 60):
    """zeta(s) by Euler-Maclaurin with 10 Bernoulli corrections; vectorized in s."""
    s = np.asarray(s, dtype=complex)
    n = np.arange(1, n_terms, dtype=float)
    head = np.exp(-np.multiply.outer(s, np.log(n))).sum(axis=-1)
    N = float(n_terms)
    logN = math.log(N)
    total = head + np.exp((1 - s) * logN) / (s - 1) + 0.5 * np.exp(-s * logN)
    rising = s.copy()  # s (s+1) ... (s+2k-2)
    fact = 2.0  # (2k)!
    for k, b in enumerate(BERNOULLI, start=1):
        total = total + b / fact * rising * np.exp((-s - 2 * k + 1) * logN)
        rising = rising * (s + 2 * k - 1) * (s + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
    return total


def eta_em(s, n_terms: int = 60):
    """eta(s) = (1 - 2^(1-s)) zeta(s) through the Euler-Maclaurin zeta."""
    s = np.asarray(s, dtype=complex)
    return (1 - np.exp((1 - s) * math.log(2.0))) * zeta_em(s, n_terms)


def eta_partial(s: complex, n_terms: int = 10**6):
    """Plain partial sum of the eta series and the alternating-tail bound.

    For real s > 0 the tail is bounded by the first omitted term; for
    complex s the bound |s| / (sigma N^sigma) from summation by parts is used.
    """
    n = np.arange(1, n_terms + 1, dtype=float)
    signs = np.where(n % 2 == 1, 1.0, -1.0)
    terms = signs * np.exp(-complex(s) * np.log(n))
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    sigma = complex(s).real
    bound = abs(complex(s)) / sigma * (n_terms + 1) ** (-sigma)
    return value, bound


def mp_eta(s) -> complex:
    with mpmath.workdps(30):
        return complex(mpmath.altzeta(s))


def dense_zero_oracle(t_lo: float, t_hi: float, step: float = 1e-3,
                      threshold: float = 1e-6, n_terms: int = 80):
    """Critical-line zeros of eta as refined local minima of |eta|.

    |eta(1/2 + it)| is tabulated on a grid of spacing ``step``; each grid
    local minimum is refined by bounded minimization of |eta|^2 and kept when the
    refined |eta| is below ``threshold``.
    """
    ts = np.arange(t_lo, t_hi + 0.5 * step, step)
    mags = np.concatenate([
        np.abs(eta_em(0.5 + 1j * chunk, n_terms))
        for chunk in np.array_split(ts, max(1, len(ts) // 5000))
    ])
    zeros = []
    for i in range(1, len(ts) - 1):
        if mags[i] < mags[i - 1] and mags[i] <= mags[i + 1]:
            # |eta|^2 is smooth at a zero where |eta| has a kink
            res = minimize_scalar(
                lambda t: float(np.abs(eta_em(0.5 + 1j * t, n_terms)) ** 2),
                bounds=(ts[i - 1], ts[i + 1]), method="bounded",
                options={"xatol": 1e-12})
            if math.sqrt(res.fun) < threshold:
                zeros.append(float(res.x))
    return zeros
