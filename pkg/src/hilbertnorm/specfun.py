"""Real-argument special functions: Gamma, log-Gamma, Beta, digamma, polygamma.

Everything here is self-contained (no libm lgamma, no scipy) so the accuracy
of downstream norm formulas does not depend on platform math-library quality.
All functions take positive real arguments; reflection tricks are applied
internally where they help, never exposed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError

__all__ = [
    "ToleranceConfig",
    "gamma",
    "log_gamma",
    "beta",
    "digamma",
    "polygamma2",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Termination control for series-based evaluations."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_terms: int = 10**6

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be > 0, got {self.abs_tol}")
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


_DEFAULT_TOL = ToleranceConfig()

# Lanczos approximation, g = 7, 9-term coefficient set (double precision).
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _lanczos_sum(z: float) -> float:
    s = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        s += _LANCZOS[i] / (z + i)
    return s


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if x < 0.5:
        # reflection keeps the Lanczos shift away from the pole at 0
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    base = z + _LANCZOS_G + 0.5
    return (
        _HALF_LOG_TWO_PI
        + (z + 0.5) * math.log(base)
        - base
        + math.log(_lanczos_sum(z))
    )


def gamma(x: float) -> float:
    """Gamma(x) for x > 0; exact at integer arguments up to 170!."""
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    if x == math.floor(x) and x <= 171.0:
        return float(math.factorial(int(x) - 1))
    return math.exp(log_gamma(x))


def beta(s: float, t: float) -> float:
    """Beta function B(s, t) for s, t > 0, computed through log-Gamma.

    The log-space route keeps arguments like B(tiny, large) well away from
    overflow; float addition commutes, so B(s, t) == B(t, s) bit for bit.
    """
    if not s > 0 or not t > 0:
        raise DomainError(f"beta requires positive arguments, got ({s}, {t})")
    lo, hi = (s, t) if s <= t else (t, s)
    return math.exp(log_gamma(lo) + log_gamma(hi) - log_gamma(lo + hi))


# Asymptotic series psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n}),
# truncated where the x >= 10 shift makes the tail < 1 ulp.
_DIGAMMA_ASYMPTOTIC = (
    -1.0 / 12.0,
    1.0 / 120.0,
    -1.0 / 252.0,
    1.0 / 240.0,
    -1.0 / 132.0,
    691.0 / 32760.0,
    -1.0 / 12.0,
)


def digamma(x: float) -> float:
    """Digamma psi(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    for c in reversed(_DIGAMMA_ASYMPTOTIC):
        tail = (tail + c) * inv2
    return acc + math.log(x) - 0.5 / x + tail


def polygamma2(x: float, cfg: ToleranceConfig | None = None) -> float:
    """Second derivative of digamma, psi''(x), for x > 0.

    Sums -2/(x+k)^3 directly until the term drops below ``abs_tol``, then
    adds an Euler-Maclaurin tail correction; plain truncation of this series
    converges far too slowly for small x. The result is strictly negative.
    """
    if not x > 0:
        raise DomainError(f"polygamma2 requires x > 0, got {x}")
    cfg = cfg or _DEFAULT_TOL
    # term 2/(x+k)^3 < abs_tol once x+k > (2/abs_tol)^(1/3)
    cutoff = (2.0 / cfg.abs_tol) ** (1.0 / 3.0)
    n_terms = max(1, int(math.ceil(cutoff - x)))
    if n_terms > cfg.max_terms:
        raise AccuracyError(
            f"polygamma2 series needs {n_terms} terms, cap is {cfg.max_terms}",
            best=None,
        )
    k = np.arange(n_terms, dtype=float)
    direct = float(np.sum(2.0 / (x + k) ** 3))
    y = x + n_terms
    # Euler-Maclaurin: integral + half-term + derivative corrections
    tail = 1.0 / (y * y) + 1.0 / y**3 + 0.5 / y**4 - 1.0 / (6.0 * y**6)
    return -(direct + tail)
