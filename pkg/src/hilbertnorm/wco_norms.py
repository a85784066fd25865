"""Closed-form norms of the composition operators T_t on the growth spaces,
and the resulting lower/upper bounds for the Hilbert matrix operator.

For exponent alpha <= 2/3 the norm of T_t is the boundary value
t**(alpha-1) (1-t)**(-alpha) for every t. For alpha > 2/3 and t below the
threshold (3 alpha - 2)/(4 alpha - 2) the supremum moves to an interior
point x0, the admissible root of a quadratic; the norm is then G(x0) for an
explicit profile G. Integrating the norm in t gives the upper bound; the
lower bound is pi/sin(alpha pi) via the extremal family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import IntegralResult, QuadratureConfig, integrate

__all__ = [
    "TtNormBreakdown",
    "threshold_tstar",
    "quadratic_x0",
    "G_eval",
    "F_eval",
    "R_project",
    "tt_norm",
    "hinf_lower_bound",
    "hinf_upper_bound",
    "hinf_bound_breakdown",
    "tt_norm_integral",
]

_TWO_THIRDS = 2.0 / 3.0


@dataclass
class TtNormBreakdown:
    """Norm of T_t with the regime that produced it."""

    alpha: float
    t: float
    regime: str  # "boundary_formula" or "interior_max"
    x0: float | None
    value: float


def _check_alpha(alpha: float):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")


def _check_t(t: float):
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must be in (0, 1), got {t}")


def threshold_tstar(alpha: float) -> float:
    """(3 alpha - 2)/(4 alpha - 2): negative below alpha = 2/3, -> 1/2 as alpha -> 1."""
    if not 0.5 < alpha < 1.0:
        raise DomainError(f"threshold requires 1/2 < alpha < 1, got {alpha}")
    return (3.0 * alpha - 2.0) / (4.0 * alpha - 2.0)


def _discriminant(alpha: float, t):
    # equals (1-alpha)^2 + 2 alpha (2 alpha - 1) t: positive on the whole domain
    return 4.0 * alpha * alpha * t - 2.0 * alpha * t + alpha * alpha - 2.0 * alpha + 1.0


def quadratic_x0(alpha: float, t: float) -> float:
    """Admissible root of (1-2a)x^2 + (4at-2t+2a)x + (1-2a)t^2 - 1.

    Computed in the fully rationalized form
        x0 = (1 + (2a-1) t^2) / (a + 2at - t + sqrt(D)),
    which is algebraically identical to the textbook (A - sqrt(D))/(2a - 1)
    but has no subtractive cancellation anywhere on the domain.
    """
    if not _TWO_THIRDS < alpha < 1.0:
        raise DomainError(f"quadratic_x0 requires 2/3 < alpha < 1, got {alpha}")
    _check_t(t)
    disc = _discriminant(alpha, t)
    if disc < 0.0:
        raise RuntimeError(f"negative discriminant {disc} cannot occur for valid inputs")
    return (1.0 + (2.0 * alpha - 1.0) * t * t) / (alpha + 2.0 * alpha * t - t + math.sqrt(disc))


def _one_minus_x0(alpha: float, t):
    """1 - x0 without forming x0 first; needed when t -> 0 drives x0 -> 1.

    Derived by rationalizing sqrt(D) - (1 - alpha); every factor is positive.
    Accepts scalars or arrays.
    """
    sqrt_d = np.sqrt(_discriminant(alpha, t))
    two_am1 = 2.0 * alpha - 1.0
    numer = two_am1 * t * (2.0 * alpha / (sqrt_d + 1.0 - alpha) + (1.0 - t))
    return numer / (alpha + 2.0 * alpha * t - t + sqrt_d)


def G_eval(alpha: float, t: float, x: float) -> float:
    """Radial profile (1-x)^(2a-1) ((1-t+x)/((1-t)^2 (1+t-x)))^a on [t-1, 1-t].

    Continuous extension: vanishes at x = t-1, equals the boundary norm
    t^(a-1) (1-t)^(-a) at x = 1-t.
    """
    _check_alpha(alpha)
    _check_t(t)
    if not t - 1.0 <= x <= 1.0 - t:
        raise DomainError(f"x must lie in [t-1, 1-t] = [{t - 1.0}, {1.0 - t}], got {x}")
    ratio = (1.0 - t + x) / ((1.0 - t) ** 2 * (1.0 + t - x))
    return (1.0 - x) ** (2.0 * alpha - 1.0) * ratio**alpha


def _G_from_gap(alpha: float, t, m):
    """G at x = 1 - m, for m possibly tiny (stable form of G(x0) near t = 0)."""
    ratio = (2.0 - m - t) / ((1.0 - t) ** 2 * (m + t))
    return m ** (2.0 * alpha - 1.0) * ratio**alpha


def F_eval(alpha: float, t: float, z: complex) -> float:
    """|1-(1-t)z|^(2a-1) ((1-|z|^2)/(|1-(1-t)z|^2 - t^2))^a on the open disk.

    Restricted to the ray x/(1-t), x in (t-1, 1-t), this is G(x); its disk
    supremum is the norm of T_t.
    """
    _check_alpha(alpha)
    _check_t(t)
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"F_eval requires |z| < 1, got |z| = {abs(z)}")
    a2 = abs(1.0 - (1.0 - t) * z) ** 2
    return a2 ** (alpha - 0.5) * ((1.0 - abs(z) ** 2) / (a2 - t * t)) ** alpha


def R_project(z: complex) -> float:
    """Rotation of z around the point 1 onto the real axis: 1 - |z - 1|."""
    return 1.0 - abs(complex(z) - 1.0)


def tt_norm(alpha: float, t: float) -> TtNormBreakdown:
    """Operator norm of T_t on the growth space with exponent alpha."""
    _check_alpha(alpha)
    _check_t(t)
    if alpha > _TWO_THIRDS and t < threshold_tstar(alpha):
        x0 = quadratic_x0(alpha, t)
        return TtNormBreakdown(alpha, t, "interior_max", x0, G_eval(alpha, t, x0))
    value = t ** (alpha - 1.0) * (1.0 - t) ** (-alpha)
    return TtNormBreakdown(alpha, t, "boundary_formula", None, value)


def hinf_lower_bound(alpha: float) -> float:
    """pi/sin(alpha pi), attained along the normalized extremal family."""
    _check_alpha(alpha)
    return math.pi / math.sin(alpha * math.pi)


def tt_norm_integral(alpha: float, cfg: QuadratureConfig | None = None) -> IntegralResult:
    """Quadrature of the boundary formula t^(a-1) (1-t)^(-a) over (0, 1).

    Equals B(alpha, 1-alpha) = pi/sin(alpha pi); kept as an explicit
    verification path for the exact-norm range.
    """
    _check_alpha(alpha)

    def integrand(x, dl, dr):
        return dl ** (alpha - 1.0) * dr ** (-alpha)

    return integrate(integrand, 0.0, 1.0, cfg, distances=True)


def _upper_pieces(alpha: float, cfg: QuadratureConfig | None):
    tstar = threshold_tstar(alpha)

    def interior_integrand(x, dl, dr):
        t = dl  # exact near the t -> 0 singularity (~ t^(alpha-1))
        return _G_from_gap(alpha, t, _one_minus_x0(alpha, t))

    left = integrate(interior_integrand, 0.0, tstar, cfg, distances=True)

    # On (tstar, 1) substitute 1 - t = (1 - tstar) u^(1/(1-alpha)): the mesh
    # grading absorbs the (1-t)^(-alpha) singularity exactly and leaves a
    # smooth integrand. Integrating the raw form instead loses absolute
    # accuracy once alpha > ~0.95, where double precision cannot place nodes
    # deep enough into the boundary layer.
    one_minus = 1.0 - tstar
    grading = 1.0 / (1.0 - alpha)

    def boundary_integrand(u):
        t = 1.0 - one_minus * np.power(u, grading)
        return np.power(t, alpha - 1.0)

    scale = one_minus ** (1.0 - alpha) / (1.0 - alpha)
    raw = integrate(boundary_integrand, 0.0, 1.0, cfg)
    right = IntegralResult(raw.value * scale, raw.err_estimate * scale, raw.evals)
    return tstar, left, right


def hinf_upper_bound(alpha: float, cfg: QuadratureConfig | None = None) -> float:
    """Upper bound for the operator norm on the growth space.

    Exact value pi/sin(alpha pi) for alpha <= 2/3. For larger alpha, the
    integral of ||T_t|| splits at the threshold: the interior-max profile
    G(x0(t)) below it (singular like t^(alpha-1) at 0) plus the boundary
    formula above it (singular like (1-t)^(-alpha) at 1).
    """
    _check_alpha(alpha)
    if alpha <= _TWO_THIRDS:
        return math.pi / math.sin(alpha * math.pi)
    _, left, right = _upper_pieces(alpha, cfg)
    return float(np.real(left.value + right.value))


def hinf_bound_breakdown(alpha: float, cfg: QuadratureConfig | None = None) -> dict:
    """Lower/upper bounds plus bookkeeping, ready for serialization."""
    _check_alpha(alpha)
    lower = hinf_lower_bound(alpha)
    if alpha <= _TWO_THIRDS:
        return {
            "alpha": alpha,
            "lower": lower,
            "upper": lower,
            "gap": 0.0,
            "regime_split_t": None,
            "quadrature_err": 0.0,
        }
    tstar, left, right = _upper_pieces(alpha, cfg)
    upper = float(np.real(left.value + right.value))
    return {
        "alpha": alpha,
        "lower": lower,
        "upper": upper,
        "gap": upper - lower,
        "regime_split_t": tstar,
        "quadrature_err": left.err_estimate + right.err_estimate,
    }
