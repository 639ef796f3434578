"""Grand-partition integrand functions and their logarithmic fugacity moments.

Per momentum cell the boson gas contributes f(x, z) = sum_m (m+1) e^(-x{m}) z^m
(a convergent series), the fermion gas the closed form
h(x, z) = 1 + 2 e^(-x) z + e^(-(q^-2 + 1) x) z^2.  All fugacity derivatives are
taken with theta = z d/dz = -d/dgamma, so the four moment integrands
L_k = theta^k ln F are positive cumulants of the occupation number:
L1 is a mean, L2 a variance, L3 a third cumulant.
"""

import math
from typing import NamedTuple

import numpy as np

from .core import BOSON, DomainError, ThermoPoint, q_bracket, validate_domain

__all__ = [
    "ConvergenceError",
    "LogMoments",
    "boson_theta_sums",
    "fermion_h_sums",
    "log_moments",
]

# Truncating when terms fall below SERIES_TOL times the running sum keeps the
# absolute series error near the rounding floor, which the quadrature
# tolerances (1e-12 absolute) require.
SERIES_TOL = 1e-16
MAX_TERMS = 10 ** 6


class ConvergenceError(RuntimeError):
    """Boson series failed to satisfy the truncation rule within max_terms."""


class LogMoments(NamedTuple):
    """ln F and its first three theta-derivatives at one (x, z) point."""

    L0: float
    L1: float
    L2: float
    L3: float


class BosonThetaSeries:
    """Reusable evaluator for F_k(x) = sum_m (m+1) m^k e^(-x{m}) z^m, k = 0..3.

    The term count M is fixed once per (z, q, tol) from the x = 0 worst case
    of the heaviest series (k = 3): summation stops when the current term is
    below tol times the running sum and the term ratio has fallen below 1.
    Every x > 0 only damps the terms further, so the same M is sufficient
    across the integration range.
    """

    def __init__(self, z, q, tol=SERIES_TOL, max_terms=MAX_TERMS):
        if not 0.0 < z < 1.0:
            raise DomainError(f"boson series requires 0 < z < 1, got z = {z!r}")
        self.z = z
        self.q = q
        M = 64
        while True:
            m = np.arange(M, dtype=float)
            t3 = (m + 1.0) * m ** 3 * z ** m
            s = t3.sum()
            if t3[-1] == 0.0 or (t3[-1] < tol * s and t3[-1] < t3[-2]):
                break
            if M >= max_terms:
                raise ConvergenceError(
                    f"boson series not converged within {max_terms} terms "
                    f"(z = {z}, q = {q}, tol = {tol})")
            M = min(2 * M, max_terms)
        self._m = m
        self._m2 = m * m
        self._m3 = m ** 3
        self._w = (m + 1.0) * z ** m
        self._br = np.asarray(q_bracket(m, q))  # may hold inf for large q

    def excess_sums(self, x):
        """(F0 - 1, F1, F2, F3) at scalar x >= 0; F0 - 1 omits the m = 0 term."""
        if x < 0:
            raise DomainError(f"x must be >= 0, got {x!r}")
        if x > 0:
            # x * inf = inf and exp(-inf) = 0 implement the large-bracket
            # cutoff (x {m} > 745 underflows) without special-casing.
            with np.errstate(over="ignore"):
                t = self._w * np.exp(-x * self._br)
        else:
            t = self._w
        return t[1:].sum(), t @ self._m, t @ self._m2, t @ self._m3

    def sums(self, x):
        s0, f1, f2, f3 = self.excess_sums(x)
        return 1.0 + s0, f1, f2, f3


def boson_theta_sums(x, z, q, tol=SERIES_TOL, max_terms=MAX_TERMS):
    """Boson sums (F0, F1, F2, F3) with F_k = sum_m (m+1) m^k e^(-x{m}) z^m.

    F0 includes the m = 0 term, equal to 1.  Requires 0 < z < 1; raises
    ConvergenceError if the truncation rule is not met within max_terms.
    """
    return BosonThetaSeries(z, q, tol, max_terms).sums(x)


def _fermion_excess(x, z, q):
    """(u, v) with h = 1 + u + v, u = 2 z e^(-x), v = z^2 e^(-(q^-2 + 1) x)."""
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    u = 2.0 * z * math.exp(-x)
    v = z * z * math.exp(-(q ** -2 + 1.0) * x)
    return u, v


def fermion_h_sums(x, z, q):
    """Fermion sums (F0, F1, F2, F3) from the closed three-term form of h.

    The z-power m contributes m^k under theta, so
    F0 = 1 + 2 e^(-x) z + e^(-(q^-2 + 1) x) z^2 and
    F_k = 2 e^(-x) z + 2^k e^(-(q^-2 + 1) x) z^2 for k >= 1.
    """
    u, v = _fermion_excess(x, z, q)
    return 1.0 + u + v, u + 2.0 * v, u + 4.0 * v, u + 8.0 * v


def _cumulants(excess0, f1, f2, f3):
    f0 = 1.0 + excess0
    r1 = f1 / f0
    return LogMoments(
        L0=math.log1p(excess0),
        L1=r1,
        L2=f2 / f0 - r1 * r1,
        L3=f3 / f0 - 3.0 * f1 * f2 / (f0 * f0) + 2.0 * r1 ** 3,
    )


def log_moments(spec, x, z, tol=SERIES_TOL):
    """LogMoments of the integrand F (f for bosons, h for fermions) at (x, z).

    L0 = ln F0, L1 = F1/F0, L2 = F2/F0 - (F1/F0)^2,
    L3 = F3/F0 - 3 F1 F2 / F0^2 + 2 (F1/F0)^3.
    """
    validate_domain(spec, ThermoPoint(z=z))
    if spec.statistics == BOSON:
        s0, f1, f2, f3 = BosonThetaSeries(z, spec.q, tol).excess_sums(x)
    else:
        u, v = _fermion_excess(x, z, spec.q)
        s0, f1, f2, f3 = u + v, u + 2.0 * v, u + 4.0 * v, u + 8.0 * v
    return _cumulants(s0, f1, f2, f3)
