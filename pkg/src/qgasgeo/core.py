"""Shared domain types, the deformed bracket, and parameter-domain validation.

The library works in reduced units throughout: the thermal wavelength is
lambda = sqrt(beta) (proportionality constant 1) and the container volume
(V in three dimensions, area A in two) defaults to 1, so every reported
curvature is in units of lambda^D / volume and depends only on (z, q, D).
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BOSON",
    "FERMION",
    "DomainError",
    "GasSpec",
    "ReducedUnits",
    "ThermoPoint",
    "q_bracket",
    "validate_domain",
]

BOSON = "boson"
FERMION = "fermion"


class DomainError(ValueError):
    """Raised when a parameter point lies outside the physical domain."""


@dataclass(frozen=True)
class GasSpec:
    """Which gas: statistics ('boson' or 'fermion'), deformation q > 0, dimension 2 or 3."""

    statistics: str
    q: float
    dimension: int

    def __post_init__(self):
        if self.statistics not in (BOSON, FERMION):
            raise DomainError(
                f"statistics must be {BOSON!r} or {FERMION!r}, got {self.statistics!r}")
        # q = 0 would make the fermion exponent q^-2 infinite and degenerate
        # the boson bracket, so it is excluded along with q < 0.
        if not (isinstance(self.q, (int, float)) and math.isfinite(self.q) and self.q > 0):
            raise DomainError(f"deformation parameter q must be finite and > 0, got {self.q!r}")
        if self.dimension not in (2, 3):
            raise DomainError(f"dimension must be 2 or 3, got {self.dimension!r}")

    @property
    def nu(self):
        """Exponent of the density-of-states factor x^nu: (D - 2) / 2."""
        return (self.dimension - 2) / 2.0

    @property
    def p(self):
        """Power-law exponent D / 2 of ln Z = K beta^(-p) a(gamma)."""
        return self.dimension / 2.0


@dataclass(frozen=True)
class ThermoPoint:
    """A point (z, beta) of the two-parameter manifold.

    The geometric coordinates are beta^1 = beta and beta^2 = gamma = -beta mu,
    so the fugacity z = exp(beta mu) determines gamma = -ln z.
    """

    z: float
    beta: float = 1.0

    @property
    def gamma(self):
        return -math.log(self.z)


@dataclass(frozen=True)
class ReducedUnits:
    """Unit conventions: lambda = beta^(1/2), container volume defaults to 1."""

    volume: float = 1.0

    def thermal_wavelength(self, beta):
        return math.sqrt(beta)

    def lambda_power(self, beta, dimension):
        """lambda^D = beta^(D/2)."""
        return beta ** (dimension / 2.0)


def q_bracket(x, q):
    """Deformed number {x} = (1 - q^(2x)) / (1 - q^2).

    Evaluated as expm1(2 x ln q) / expm1(2 ln q), which is exact for every
    q != 1 including q within rounding distance of 1; the q = 1 limit {x} = x
    is returned directly.  Accepts scalar or array x.

    >>> q_bracket(3, 1.0)
    3.0
    >>> q_bracket(2, 2.0)
    5.0
    """
    if not (isinstance(q, (int, float)) and math.isfinite(q) and q > 0):
        raise DomainError(f"q must be finite and > 0, got {q!r}")
    xarr = np.asarray(x, dtype=float)
    if q == 1.0:
        out = xarr
    else:
        t = 2.0 * math.log(q)
        # q > 1 with large x overflows to inf, which downstream exponentials
        # correctly map to e^(-x {m}) = 0.
        with np.errstate(over="ignore"):
            out = np.expm1(xarr * t) / math.expm1(t)
    return out if out.ndim else float(out)


def validate_domain(spec, point):
    """Check that (spec, point) is inside the physical domain.

    Fermion gases accept any z > 0.  Boson gases are restricted to
    0 < z < 1 for every q: the defining series diverges at z >= 1 for
    q <= 1, and the x -> 0 edge is log-divergent for z >= 1, q > 1.
    Raises DomainError naming the violated constraint; returns None.

    `point` may be a ThermoPoint or a bare fugacity.
    """
    if not isinstance(point, ThermoPoint):
        point = ThermoPoint(z=float(point))
    if not (math.isfinite(point.beta) and point.beta > 0):
        raise DomainError(f"beta must be finite and > 0, got {point.beta!r}")
    if not (math.isfinite(point.z) and point.z > 0):
        raise DomainError(f"fugacity z must be finite and > 0, got {point.z!r}")
    if spec.statistics == BOSON and point.z >= 1.0:
        raise DomainError(
            f"boson fugacity must satisfy z < 1 (series domain), got z = {point.z!r}")
    return None
