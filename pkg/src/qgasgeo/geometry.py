"""Two-parameter thermodynamic metric and its scalar curvature.

With coordinates beta^1 = beta and beta^2 = gamma = -beta mu, the metric is
the Hessian g_ab = d^2 ln Z / dbeta^a dbeta^b.  Both statistics share the
structure ln Z = K beta^(-p) a(gamma) with p = D/2 and K = 2 V / sqrt(pi)
for D = 3, K = A for D = 2 (volume factors default to 1 in reduced units),
so the components reduce to the theta-moment integrals:

    g11 = p (p+1) K beta^(-p-2) a
    g12 = p K beta^(-p-1) b
    g22 = K beta^(-p) c

The scalar curvature in reduced units lambda^D / volume depends only on
(z, q, D).  Two independent evaluations are provided: the closed form in the
moments (numerator N = b^2 c + a b d - 2 a c^2) and a determinant oracle
built directly from the metric components and their derivatives.  R > 0 is
the boson-like regime (effective statistical attraction), R < 0 fermion-like.
"""

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import bisect

from .core import GasSpec, ReducedUnits
from .quadrature import MomentSet, moment_integrals

__all__ = [
    "NORM_PAPER",
    "NORM_RAW",
    "CurvatureResult",
    "DegenerateMetricError",
    "MetricTensor",
    "StepSizeError",
    "curvature_closed_form",
    "curvature_from_moments",
    "curvature_sign_boundary",
    "determinant_curvature_oracle",
    "metric_tensor",
]

SQRT_PI = math.sqrt(math.pi)

# 'paper' doubles the raw scalar curvature (two-component counting convention,
# the normalization the model's published curves use); 'raw' is the plain
# curvature of g.  paper = 2 * raw exactly.
NORM_PAPER = "paper"
NORM_RAW = "raw"

# Denominators below this magnitude signal a degenerate metric, which the
# model does not produce anywhere in its physical domain.
_DEGENERATE_FLOOR = 1e-300

# Target relative accuracy of the finite-difference diagnostic mode.
_FD_TARGET_REL = 1e-6


class DegenerateMetricError(RuntimeError):
    """det g (or the closed-form denominator) vanished to rounding level."""


class StepSizeError(RuntimeError):
    """Finite-difference step too large (or too small) for the target accuracy."""


@dataclass(frozen=True)
class MetricTensor:
    """Symmetric 2x2 metric at one (spec, beta, z) point."""

    g11: float
    g12: float
    g22: float
    beta: float
    spec: GasSpec

    @property
    def det(self):
        return self.g11 * self.g22 - self.g12 * self.g12


@dataclass(frozen=True)
class CurvatureResult:
    """Reduced scalar curvature with its normalization and the moments used."""

    R_reduced: float
    normalization: str
    moments: MomentSet


def _prefactor(spec, units):
    return 2.0 * units.volume / SQRT_PI if spec.dimension == 3 else units.volume


def _components(spec, beta, abc, units):
    """(g11, g12, g22) from the first three moments (a, b, c).

    Also applies to gamma-derivatives: feeding (-b, -c, -d) yields
    (d_g g11, d_g g12, d_g g22) by the theta-moment ladder.
    """
    a, b, c = abc
    p = spec.p
    K = _prefactor(spec, units)
    g11 = p * (p + 1.0) * K * beta ** (-p - 2.0) * a
    g12 = p * K * beta ** (-p - 1.0) * b
    g22 = K * beta ** (-p) * c
    return g11, g12, g22


def metric_tensor(spec, beta, z, cfg=None, units=None):
    """Metric components at (beta, z) from the theta moments.

    All moments are positive, so g12 > 0 in this sign convention.
    """
    units = units or ReducedUnits()
    m = moment_integrals(spec, z, cfg)
    g11, g12, g22 = _components(spec, beta, (m.a, m.b, m.c), units)
    return MetricTensor(g11=g11, g12=g12, g22=g22, beta=beta, spec=spec)


def curvature_from_moments(spec, moments, normalization=NORM_PAPER):
    """Closed-form reduced curvature from an existing MomentSet."""
    if normalization not in (NORM_PAPER, NORM_RAW):
        raise ValueError(f"normalization must be 'paper' or 'raw', got {normalization!r}")
    a, b, c, d = moments
    numerator = b * b * c + a * b * d - 2.0 * a * c * c
    if spec.dimension == 3:
        denom = 5.0 * a * c - 3.0 * b * b
        scale = 5.0 * SQRT_PI
    else:
        denom = 2.0 * a * c - b * b
        scale = 2.0
    if abs(denom) < _DEGENERATE_FLOOR:
        raise DegenerateMetricError(
            f"metric denominator {denom!r} below {_DEGENERATE_FLOOR} for {spec} at z = {moments.z}")
    R = scale * numerator / (denom * denom)
    if normalization == NORM_RAW:
        R /= 2.0
    return CurvatureResult(R_reduced=R, normalization=normalization, moments=moments)


def curvature_closed_form(spec, z, cfg=None, normalization=NORM_PAPER):
    """Reduced scalar curvature at fugacity z via the closed form.

    R = 5 sqrt(pi) N / (5ac - 3b^2)^2 for D = 3 and 2 N / (2ac - b^2)^2 for
    D = 2 in the doubled ('paper') normalization, N = b^2 c + a b d - 2 a c^2;
    'raw' halves these.  Units are lambda^D / volume, so beta drops out.
    """
    return curvature_from_moments(spec, moment_integrals(spec, z, cfg), normalization)


def _gamma_derivative_fd(spec, beta, z, h, cfg, units):
    """Central gamma-derivatives of (g11, g12, g22) with a step-size check.

    gamma = -ln z, so gamma +/- h corresponds to z e^(-+ h).  The forward/
    backward spread estimates the step truncation error; steps too large
    (curvature of g in gamma resolved poorly) or too small (quadrature noise
    amplified by 1/h) both trip the check.
    """
    def g_at(zz):
        m = moment_integrals(spec, zz, cfg)
        return np.array(_components(spec, beta, (m.a, m.b, m.c), units))

    g0 = g_at(z)
    gp = g_at(z * math.exp(-h))
    gm = g_at(z * math.exp(h))
    fwd = (gp - g0) / h
    bwd = (g0 - gm) / h
    central = 0.5 * (fwd + bwd)
    spread = np.max(np.abs(fwd - bwd) / np.maximum(np.abs(central), _DEGENERATE_FLOOR))
    # central error ~ (h^2/6) g''' ~ spread^2 / 6 in relative terms
    if spread > math.sqrt(60.0 * _FD_TARGET_REL):
        raise StepSizeError(
            f"fd_step = {h:.3g} unsuitable: forward/backward gamma-derivatives "
            f"disagree by {spread:.2e} relative, beyond 10x the {_FD_TARGET_REL} target")
    return central


def determinant_curvature_oracle(spec, beta, z, fd_step=None, cfg=None, units=None):
    """Scalar curvature via the 3x3 determinant, raw normalization, reduced units.

    For a two-parameter Hessian metric the curvature reduces to

        R = det [[g11,    g22,    g12   ],
                 [d_b g11, d_b g22, d_b g12],
                 [d_g g11, d_g g22, d_g g12]] / (2 (det g)^2),

    equivalent to the Levi-Civita computation (checked symbolically).  The
    beta-derivatives use the exact power-law structure.  The gamma-derivatives
    default to the analytic ladder da/dgamma = -b, db/dgamma = -c,
    dc/dgamma = -d; passing fd_step switches them to central finite
    differences in gamma, a slower path that never touches the third moment
    and is therefore independent of the ladder sign convention.

    The reduced result (units lambda^D / volume) is independent of beta.
    """
    units = units or ReducedUnits()
    p = spec.p
    m = moment_integrals(spec, z, cfg)
    g11, g12, g22 = _components(spec, beta, (m.a, m.b, m.c), units)
    # ln Z = K beta^(-p) a: each component scales as a pure power of beta
    db_g11 = -(p + 2.0) / beta * g11
    db_g12 = -(p + 1.0) / beta * g12
    db_g22 = -p / beta * g22
    if fd_step is None:
        dg_g11, dg_g12, dg_g22 = _components(spec, beta, (-m.b, -m.c, -m.d), units)
    else:
        dg_g11, dg_g12, dg_g22 = _gamma_derivative_fd(spec, beta, z, fd_step, cfg, units)
    det_g = g11 * g22 - g12 * g12
    if det_g < _DEGENERATE_FLOOR:
        raise DegenerateMetricError(f"det g = {det_g!r} not positive for {spec} at z = {z}")
    M = np.array([[g11, g22, g12],
                  [db_g11, db_g22, db_g12],
                  [dg_g11, dg_g22, dg_g12]])
    R = float(np.linalg.det(M)) / (2.0 * det_g * det_g)
    # convert to units lambda^D / volume; all beta dependence cancels
    return R * units.volume / units.lambda_power(beta, spec.dimension)


def curvature_sign_boundary(spec, z, q_lo, q_hi, cfg=None):
    """Deformation q* in (q_lo, q_hi) where R changes sign, or None.

    Evaluates the closed-form curvature at the bracket ends; if the signs
    agree there is no crossing to find and None is returned, otherwise plain
    bisection tightens the bracket to |dq| < 1e-4.
    """
    def R_of_q(q):
        return curvature_closed_form(replace(spec, q=q), z, cfg).R_reduced

    r_lo = R_of_q(q_lo)
    r_hi = R_of_q(q_hi)
    if r_lo == 0.0:
        return float(q_lo)
    if r_hi == 0.0:
        return float(q_hi)
    if math.copysign(1.0, r_lo) == math.copysign(1.0, r_hi):
        return None
    return float(bisect(R_of_q, q_lo, q_hi, xtol=1e-4))
