"""Analytic functions on the unit disk and their A^p / growth-space norms.

Functions are truncated Taylor series (TaylorFunction). The extremal family
(1 - z)**(-alpha) is available both as coefficients (for the coefficient
route of the operator) and as a closed-form evaluator, because near z = 1
the truncated series degrades exactly where the growth-space supremum lives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .quadrature import QuadratureConfig, integrate

__all__ = [
    "TaylorFunction",
    "SpaceSpec",
    "NormEstimate",
    "evaluate",
    "evaluation_tail_bound",
    "falpha_coeffs",
    "falpha_value",
    "bergman_norm",
    "korenblum_norm",
]


@dataclass
class TaylorFunction:
    """Truncated Taylor series sum a_k z^k, k < order."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if c.ndim != 1 or c.size < 1:
            raise DomainError("coeffs must be a non-empty 1-D sequence")
        self.coeffs = c

    @property
    def order(self) -> int:
        return self.coeffs.size

    def to_json(self) -> list[list[float]]:
        return [[float(a.real), float(a.imag)] for a in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "TaylorFunction":
        try:
            coeffs = [complex(re, im) for re, im in data]
        except (TypeError, ValueError) as exc:
            raise DomainError(f"coefficient JSON must be a list of [re, im] pairs: {exc}")
        return cls(np.asarray(coeffs))

    def __call__(self, z):
        """Vectorized evaluation; domain checks live in evaluate()."""
        return np.polynomial.polynomial.polyval(z, self.coeffs)


@dataclass(frozen=True)
class SpaceSpec:
    """Which norm is in force: Bergman exponent p or growth exponent alpha."""

    kind: str
    p: float | None = None
    alpha: float | None = None

    def __post_init__(self):
        if self.kind == "bergman":
            if self.p is None or not 2.0 < self.p < 4.0:
                raise DomainError(f"bergman space requires 2 < p < 4, got {self.p}")
        elif self.kind == "korenblum":
            if self.alpha is None or not 0.0 < self.alpha < 1.0:
                raise DomainError(f"korenblum space requires 0 < alpha < 1, got {self.alpha}")
        else:
            raise DomainError(f"kind must be 'bergman' or 'korenblum', got {self.kind!r}")

    @classmethod
    def bergman(cls, p: float) -> "SpaceSpec":
        return cls("bergman", p=p)

    @classmethod
    def korenblum(cls, alpha: float) -> "SpaceSpec":
        return cls("korenblum", alpha=alpha)


@dataclass
class NormEstimate:
    value: float
    grid: dict = field(default_factory=dict)
    tail_bound: float = 0.0

    def to_json(self) -> dict:
        return {"value": self.value, "grid": self.grid, "tail_bound": self.tail_bound}


def evaluate(f: TaylorFunction, z: complex) -> complex:
    """Horner evaluation of the truncated series at |z| < 1."""
    if abs(z) >= 1.0:
        raise DomainError(f"evaluation point must satisfy |z| < 1, got |z| = {abs(z)}")
    return complex(f(z))


def evaluation_tail_bound(f: TaylorFunction, r: float) -> float:
    """Geometric bound on the dropped tail at radius r < 1: max|a| r^N / (1-r)."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must be in [0, 1), got {r}")
    return float(np.max(np.abs(f.coeffs)) * r**f.order / (1.0 - r))


def falpha_coeffs(alpha: float, order: int = 256) -> TaylorFunction:
    """Binomial coefficients of (1 - z)**(-alpha): a_k = a_{k-1} (k-1+alpha)/k."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    a = np.empty(order, dtype=complex)
    a[0] = 1.0
    for k in range(1, order):
        a[k] = a[k - 1] * (k - 1 + alpha) / k
    return TaylorFunction(a)


def falpha_value(alpha: float, z):
    """Closed form (1 - z)**(-alpha), principal branch; z scalar or array."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    return (1.0 - np.asarray(z, dtype=complex)) ** (-alpha)


def _theta_grid(n_theta: int) -> np.ndarray:
    return np.linspace(0.0, 2.0 * math.pi, n_theta, endpoint=False)


def _circle_means(f: TaylorFunction, p: float, r: np.ndarray, phases: np.ndarray) -> np.ndarray:
    """mean_theta |f(r e^{i theta})|^p for an array of radii.

    phases is the precomputed matrix a_k exp(i k theta_j); the radial power
    matrix is built in blocks to cap memory at deep quadrature levels.
    """
    k = np.arange(f.order)
    out = np.empty(r.size)
    block = max(1, 2**22 // max(1, f.order))
    for lo in range(0, r.size, block):
        rb = r[lo : lo + block]
        radial = np.power(rb[:, None], k[None, :])
        vals = radial @ phases
        out[lo : lo + block] = np.mean(np.abs(vals) ** p, axis=1)
    return out


def bergman_norm(
    f: TaylorFunction,
    p: float,
    cfg: QuadratureConfig | None = None,
    *,
    n_theta: int = 512,
) -> NormEstimate:
    """A^p norm against normalized area measure, so ||1|| = 1.

    Polar form: ||f||^p = 2 int_0^1 r * mean_theta |f(r e^{i theta})|^p dr,
    with the radial integral done by the singularity-aware default rule
    (abscissae approach r = 1 but never reach it).
    """
    if not p > 0:
        raise DomainError(f"bergman_norm requires p > 0, got {p}")
    phases = f.coeffs[:, None] * np.exp(1j * np.arange(f.order)[:, None] * _theta_grid(n_theta)[None, :])

    def integrand(r):
        return 2.0 * r * _circle_means(f, p, np.asarray(r), phases)

    res = integrate(integrand, 0.0, 1.0, cfg)
    value = max(float(np.real(res.value)), 0.0) ** (1.0 / p)
    grid = {
        "rule": "tanh_sinh",
        "n_theta": n_theta,
        "quad_err": res.err_estimate,
        "evals": res.evals,
    }
    return NormEstimate(value=value, grid=grid, tail_bound=0.0)


def _radial_ladder(n_r: int, r_max: float) -> np.ndarray:
    """Radii from 0 to r_max, log-crowding toward the boundary.

    Evaluated at fractions i/(n_r - 1) of a fixed profile, so doubling via
    n -> 2n - 1 yields a superset of the coarse grid.
    """
    tau = np.linspace(0.0, 1.0, n_r)
    decades = -math.log10(1.0 - r_max) if r_max < 1.0 else 12.0
    return r_max * (1.0 - 10.0 ** (-decades * tau)) / (1.0 - 10.0 ** (-decades))


def korenblum_norm(
    f,
    alpha: float,
    *,
    n_r: int = 400,
    n_theta: int = 256,
    r_max: float = 1.0 - 1e-6,
    refine: bool = True,
) -> NormEstimate:
    """sup over the disk of (1 - |z|^2)^alpha |f(z)|, from below.

    f may be a TaylorFunction or any vectorized evaluator z -> complex.
    The polar grid extends to r_max; the best angular slice is then refined
    radially by golden-section search. The result is a lower bound on the
    true supremum; the grid descriptor records the resolution used.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    if not 0.0 < r_max < 1.0:
        raise DomainError(f"r_max must be in (0, 1), got {r_max}")
    if not callable(f):
        raise DomainError("f must be a TaylorFunction or a callable evaluator")
    evaluator = f

    r = _radial_ladder(n_r, r_max)
    theta = _theta_grid(n_theta)
    z = r[:, None] * np.exp(1j * theta[None, :])
    weight = (1.0 - r * r) ** alpha

    mags = np.abs(evaluator(z))
    surface = weight[:, None] * mags
    i_best, j_best = np.unravel_index(int(np.argmax(surface)), surface.shape)
    best = float(surface[i_best, j_best])

    if refine:
        lo = r[max(i_best - 1, 0)]
        hi = r[min(i_best + 1, n_r - 1)]
        phase = np.exp(1j * theta[j_best])

        def g(rr: float) -> float:
            return (1.0 - rr * rr) ** alpha * abs(complex(evaluator(rr * phase)))

        best = max(best, _golden_max(g, lo, hi))

    tail = 0.0
    if isinstance(f, TaylorFunction):
        tail = float(np.max((1.0 - r * r) ** alpha * np.max(np.abs(f.coeffs)) * r**f.order / np.maximum(1.0 - r, 1e-300)))
    grid = {"n_r": n_r, "n_theta": n_theta, "r_max": r_max, "refined": bool(refine)}
    return NormEstimate(value=best, grid=grid, tail_bound=tail)


def _golden_max(g, lo: float, hi: float, iters: int = 80) -> float:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - inv_phi * (hi - lo)
    x2 = lo + inv_phi * (hi - lo)
    g1, g2 = g(x1), g(x2)
    for _ in range(iters):
        if g1 < g2:
            lo, x1, g1 = x1, x2, g2
            x2 = lo + inv_phi * (hi - lo)
            g2 = g(x2)
        else:
            hi, x2, g2 = x2, x1, g1
            x1 = hi - inv_phi * (hi - lo)
            g1 = g(x1)
    return max(g1, g2)
