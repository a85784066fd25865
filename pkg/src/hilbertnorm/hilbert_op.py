"""The Hilbert matrix operator: coefficient form, integral form, multiplier.

Coefficient form: (a_k) -> (sum_k a_k / (n + k + 1)). Integral form: the
average over t in (0, 1) of the weighted composition operators
T_t f = omega_t * (f o phi_t) with omega_t(z) = 1/((t-1)z + 1) and
phi_t(z) = t/((t-1)z + 1), a self-map of the disk. Applied to the extremal
family (1-z)**(-alpha) the operator acts as multiplication by psi_alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .function_space import TaylorFunction
from .quadrature import IntegralResult, QuadratureConfig, integrate

__all__ = [
    "WCOParams",
    "wco_apply",
    "hilbert_coeffs",
    "hilbert_integral",
    "hilbert_integral_result",
    "psi_alpha",
    "psi_alpha_result",
]


@dataclass(frozen=True)
class WCOParams:
    """Parameter t in (0, 1) of the weighted composition operator T_t."""

    t: float

    def __post_init__(self):
        if not 0.0 < self.t < 1.0:
            raise DomainError(f"WCOParams requires 0 < t < 1, got {self.t}")

    def omega(self, z):
        return 1.0 / ((self.t - 1.0) * z + 1.0)

    def phi(self, z):
        return self.t / ((self.t - 1.0) * z + 1.0)


def wco_apply(params: WCOParams, f, z: complex) -> complex:
    """T_t f at z: omega_t(z) * f(phi_t(z)); phi_t(z) stays inside the disk."""
    if abs(z) >= 1.0:
        raise DomainError(f"wco_apply requires |z| < 1, got |z| = {abs(z)}")
    return complex(params.omega(z) * f(params.phi(z)))


def hilbert_coeffs(f: TaylorFunction, out_order: int | None = None) -> TaylorFunction:
    """Coefficient route: b_n = sum_k a_k / (n + k + 1), n < out_order.

    The kernel matrix 1/(n + k + 1) is symmetric; output length defaults to
    the input length (rows decay like 1/n, so longer outputs add little).
    """
    m = f.order if out_order is None else int(out_order)
    if m < 1:
        raise DomainError(f"output length must be >= 1, got {m}")
    n = np.arange(m)[:, None]
    k = np.arange(f.order)[None, :]
    return TaylorFunction((1.0 / (n + k + 1.0)) @ f.coeffs)


def _integral_transform(f, z: complex, cfg: QuadratureConfig | None) -> IntegralResult:
    z = complex(z)

    def integrand(t, dl, dr):
        # 1 - (1-t)z with 1-t = dr carried exactly; t = dl likewise
        denom = 1.0 - dr * z
        return (1.0 / denom) * f(dl / denom)

    return integrate(integrand, 0.0, 1.0, cfg, distances=True)


def hilbert_integral(f, z: complex, cfg: QuadratureConfig | None = None) -> complex:
    """Integral route: quadrature over t of T_t f at z, for |z| < 1."""
    return hilbert_integral_result(f, z, cfg).value


def hilbert_integral_result(f, z: complex, cfg: QuadratureConfig | None = None) -> IntegralResult:
    """Like hilbert_integral but returning the full quadrature result."""
    if abs(z) >= 1.0:
        raise DomainError(f"hilbert_integral requires |z| < 1, got |z| = {abs(z)}")
    return _integral_transform(f, z, cfg)


def psi_alpha(alpha: float, z: complex, cfg: QuadratureConfig | None = None) -> complex:
    """The multiplier: integral over s in (0,1) of (1 - s z)**(alpha-1) / s**alpha.

    Defined and continuous on the closed disk; the principal branch is safe
    because Re(1 - s z) > 0 for s < 1, and the s = 1, z = 1 corner is an
    integrable endpoint the rule never samples. |psi_alpha(z)| is bounded by
    its value at z = 1, pi/sin(alpha pi).
    """
    return psi_alpha_result(alpha, z, cfg).value


def psi_alpha_result(alpha: float, z: complex, cfg: QuadratureConfig | None = None) -> IntegralResult:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    if abs(z) > 1.0:
        raise DomainError(f"psi_alpha requires |z| <= 1, got |z| = {abs(z)}")
    z = complex(z)
    one_minus_z = 1.0 - z

    def integrand(s, dl, dr):
        # 1 - s z = (1 - z) + (1 - s) z, both pieces exact; s = dl near 0
        w = one_minus_z + dr * z
        return np.power(w, alpha - 1.0) * np.power(dl, -alpha)

    res = integrate(integrand, 0.0, 1.0, cfg, distances=True)
    res.value = complex(res.value)
    return res
