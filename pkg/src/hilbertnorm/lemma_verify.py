"""Numerical verification harness for the Bergman-space inequality machinery.

Three statements are swept on dense grids: the Beta-function bound
B(x,y) < (x + y - xy)/(xy) for x > 1, 0 < y < 1; the derived bound
B(2/p, 2(p-2)) <= 1/((p-2)(4-p)) on 2 < p < 4; and nonpositivity of the
functional F_p(s) whose monotonicity analysis drives the A^p norm result.
Strict inequalities are reported as margins, not booleans: numerics cannot
certify strictness pointwise, so the report always carries the worst margin
and where it occurred.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import QuadratureConfig, integrate, integrate_split
from .specfun import beta, digamma, log_gamma

__all__ = [
    "VerificationReport",
    "g_x_eval",
    "h_y_eval",
    "check_beta_bound",
    "check_lemma32",
    "psi_p_eval",
    "F_p_eval",
    "F_p_prime",
    "t0_root",
    "H_ps_eval",
    "run_verification",
    "default_grid",
]

_LEMMA_IDS = ("beta_bound", "beta_2p", "Fp_nonpositive")


@dataclass
class VerificationReport:
    lemma_id: str
    grid: dict
    tolerance: float
    worst_margin: float
    worst_point: tuple
    passed: bool
    n_points: int
    error: str | None = None

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "grid": {k: list(map(float, v)) for k, v in self.grid.items()},
            "tolerance": self.tolerance,
            "worst_margin": self.worst_margin,
            "worst_point": list(self.worst_point),
            "passed": self.passed,
            "n_points": self.n_points,
            "error": self.error,
        }


def _check_xy(x: float, y: float, *, x_min_open: float = 1.0):
    if not x > x_min_open:
        raise DomainError(f"x must be > {x_min_open}, got {x}")
    if not 0.0 < y < 1.0:
        raise DomainError(f"y must be in (0, 1), got {y}")


def g_x_eval(x: float, y: float) -> float:
    """digamma(1+x) - digamma(x+y) - (1-y)/(x+y-xy); vanishes at y = 0 and 1."""
    if not x > 1.0:
        raise DomainError(f"x must be > 1, got {x}")
    if not 0.0 <= y <= 1.0:
        raise DomainError(f"y must be in [0, 1], got {y}")
    denom = x + y - x * y
    if denom <= 0.0:
        raise DomainError(f"x + y - xy must be positive, got {denom}")
    return digamma(1.0 + x) - digamma(x + y) - (1.0 - y) / denom


def h_y_eval(x: float, y: float) -> float:
    """log Gamma(1+x) + log Gamma(1+y) - log Gamma(x+y) - log(x+y-xy).

    Zero at x = 1 and nonincreasing in x; its negativity is equivalent to
    the Beta bound margin being positive.
    """
    if not x >= 1.0:
        raise DomainError(f"x must be >= 1, got {x}")
    if not 0.0 < y < 1.0:
        raise DomainError(f"y must be in (0, 1), got {y}")
    denom = x + y - x * y
    if denom <= 0.0:
        raise DomainError(f"x + y - xy must be positive, got {denom}")
    return log_gamma(1.0 + x) + log_gamma(1.0 + y) - log_gamma(x + y) - math.log(denom)


def check_beta_bound(x: float, y: float) -> float:
    """Margin (x + y - xy)/(xy) - B(x, y); positive on x > 1, 0 < y < 1."""
    _check_xy(x, y)
    return (x + y - x * y) / (x * y) - beta(x, y)


def check_lemma32(p: float) -> float:
    """Margin 1/((p-2)(4-p)) - B(2/p, 2(p-2)); nonnegative on 2 < p < 4."""
    if not 2.0 < p < 4.0:
        raise DomainError(f"p must be in (2, 4), got {p}")
    return 1.0 / ((p - 2.0) * (4.0 - p)) - beta(2.0 / p, 2.0 * (p - 2.0))


def _check_p(p: float):
    if not 2.0 < p < 4.0:
        raise DomainError(f"p must be in (2, 4), got {p}")


def psi_p_eval(p: float, t: float) -> float:
    """t^(2/p - 1) (1-t)^(-2/p); integrably singular at both endpoints.

    The formula stays sensible at p = 4 (both exponents become +-1/2), so
    the endpoint is accepted here even though the sweeps stay inside (2, 4).
    """
    if not 2.0 < p <= 4.0:
        raise DomainError(f"p must be in (2, 4], got {p}")
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must be in (0, 1), got {t}")
    e = 2.0 / p
    return t ** (e - 1.0) * (1.0 - t) ** (-e)


def F_p_eval(p: float, s: float, cfg: QuadratureConfig | None = None) -> float:
    """((4-p)/2 + (p-2)/2 s^4) B(2/p, 1-2/p) - int_0^1 psi_p(t) max(s^2,t^2)^(p-2) dt.

    The integral is split at the kink t = s (degenerate splits at s = 0, 1
    collapse). The value is <= 0 on the whole (p, s) domain.
    """
    _check_p(p)
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"s must be in [0, 1], got {s}")
    e = 2.0 / p
    q = p - 2.0
    lead = (0.5 * (4.0 - p) + 0.5 * q * s**4) * beta(e, 1.0 - e)
    s2 = s * s

    def integrand(x, dl, dr):
        return dl ** (e - 1.0) * dr ** (-e) * np.maximum(s2, x * x) ** q

    res = integrate_split(integrand, 0.0, 1.0, [s], cfg, distances=True)
    return lead - float(np.real(res.value))


def F_p_prime(p: float, s: float, cfg: QuadratureConfig | None = None) -> float:
    """Closed-form derivative 2(p-2) s^(2p-5) (B(2/p,1-2/p) s^(8-2p) - int_0^s psi_p).

    Nonnegative for p >= 2 + sqrt(3), which is what makes F_p nondecreasing
    there.
    """
    _check_p(p)
    if not 0.0 < s <= 1.0:
        raise DomainError(f"s must be in (0, 1], got {s}")
    e = 2.0 / p
    one_minus_s = 1.0 - s

    def integrand(x, dl, dr):
        # over (0, s): t = dl exactly; 1 - t = (1 - s) + dr exactly
        return dl ** (e - 1.0) * (one_minus_s + dr) ** (-e)

    res = integrate(integrand, 0.0, s, cfg, distances=True)
    bterm = beta(e, 1.0 - e) * s ** (8.0 - 2.0 * p)
    return 2.0 * (p - 2.0) * s ** (2.0 * p - 5.0) * (bterm - float(np.real(res.value)))


def t0_root(p: float, s: float) -> float | None:
    """Root of H_{p,s} in [0, s), or None when no root exists.

    With x = (4-p) p, the candidate is (s^x - s)/(s^x - 1); it lies in
    [0, s) exactly when s^x <= s, i.e. x >= 1, i.e. 2 - sqrt(3) <= p <= 2 + sqrt(3).
    """
    _check_p(p)
    if not 0.0 < s < 1.0:
        raise DomainError(f"s must be in (0, 1), got {s}")
    x = (4.0 - p) * p
    sx = s**x
    if sx - s > 0.0:
        return None
    return (sx - s) / (sx - 1.0)


def H_ps_eval(p: float, s: float, t: float) -> float:
    """s^(8-2p) (s-t)^(-2/p) - (1-t)^(-2/p) on 0 <= t < s; blows up as t -> s."""
    _check_p(p)
    if not 0.0 < s < 1.0:
        raise DomainError(f"s must be in (0, 1), got {s}")
    if not 0.0 <= t < s:
        raise DomainError(f"t must be in [0, s) = [0, {s}), got {t}")
    e = 2.0 / p
    return s ** (8.0 - 2.0 * p) * (s - t) ** (-e) - (1.0 - t) ** (-e)


def default_grid(lemma_id: str) -> tuple[dict, float]:
    """Default sweep grid and tolerance per lemma (deterministic)."""
    if lemma_id == "beta_bound":
        return (
            {"x": np.geomspace(1.01, 50.0, 200), "y": np.linspace(0.01, 0.99, 99)},
            0.0,
        )
    if lemma_id == "beta_2p":
        return {"p": np.linspace(2.01, 3.99, 199)}, 1e-12
    if lemma_id == "Fp_nonpositive":
        return (
            {"p": np.round(np.arange(2.1, 3.95, 0.05), 10), "s": np.linspace(0.0, 1.0, 21)},
            1e-8,
        )
    raise DomainError(f"unknown lemma_id {lemma_id!r}; expected one of {_LEMMA_IDS}")


def _margin_fn(lemma_id: str, cfg: QuadratureConfig | None):
    if lemma_id == "beta_bound":
        return lambda pt: check_beta_bound(*pt)
    if lemma_id == "beta_2p":
        return lambda pt: check_lemma32(*pt)
    # F_p <= 0 is reported as margin -F_p >= 0
    return lambda pt: -F_p_eval(pt[0], pt[1], cfg)


def margin_rows(
    lemma_id: str,
    grid: dict | None = None,
    cfg: QuadratureConfig | None = None,
) -> tuple[list[str], list[tuple]]:
    """Per-point (point..., margin) rows for table output; deterministic order."""
    default, _ = default_grid(lemma_id)
    grid = grid if grid is not None else default
    names = list(grid.keys())
    axes = [np.asarray(v, dtype=float) for v in grid.values()]
    margin = _margin_fn(lemma_id, cfg)
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=-1)
    rows = [tuple(float(v) for v in pt) + (margin(tuple(float(v) for v in pt)),) for pt in points]
    return names + ["margin"], rows


def run_verification(
    lemma_id: str,
    grid: dict | None = None,
    cfg: QuadratureConfig | None = None,
    tolerance: float | None = None,
) -> VerificationReport:
    """Sweep a lemma's margin over a parameter grid.

    passed means worst_margin >= -tolerance; any evaluation error fails the
    report and records the offending grid point.
    """
    default, default_tol = default_grid(lemma_id)
    grid = grid if grid is not None else default
    tolerance = default_tol if tolerance is None else tolerance
    axes = [np.asarray(v, dtype=float) for v in grid.values()]
    margin = _margin_fn(lemma_id, cfg)

    worst = math.inf
    worst_point: tuple = ()
    count = 0
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=-1)
    for pt in points:
        tup = tuple(float(v) for v in pt)
        try:
            m = margin(tup)
        except Exception as exc:  # report, never raise, per the sweep contract
            return VerificationReport(
                lemma_id=lemma_id,
                grid={k: v for k, v in grid.items()},
                tolerance=tolerance,
                worst_margin=-math.inf,
                worst_point=tup,
                passed=False,
                n_points=count,
                error=f"{type(exc).__name__}: {exc}",
            )
        count += 1
        if m < worst:
            worst = m
            worst_point = tup
    return VerificationReport(
        lemma_id=lemma_id,
        grid={k: v for k, v in grid.items()},
        tolerance=tolerance,
        worst_margin=worst,
        worst_point=worst_point,
        passed=bool(worst >= -tolerance),
        n_points=count,
    )
