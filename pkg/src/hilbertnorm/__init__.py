"""Hilbert matrix operator on Bergman and Korenblum spaces.

Computes the operator in coefficient and weighted-composition form, the
closed-form norms of the composition operators, the resulting norm bounds,
and large numerical verification sweeps for the supporting inequalities.
"""

from .backend import BACKEND
from .errors import AccuracyError, DomainError, EvaluationError
from .function_space import (
    NormEstimate,
    SpaceSpec,
    TaylorFunction,
    bergman_norm,
    evaluate,
    falpha_coeffs,
    falpha_value,
    korenblum_norm,
)
from .hilbert_op import WCOParams, hilbert_coeffs, hilbert_integral, psi_alpha, wco_apply
from .lemma_verify import (
    VerificationReport,
    F_p_eval,
    F_p_prime,
    H_ps_eval,
    check_beta_bound,
    check_lemma32,
    g_x_eval,
    h_y_eval,
    psi_p_eval,
    run_verification,
    t0_root,
)
from .quadrature import IntegralResult, QuadratureConfig, integrate, integrate_split
from .specfun import ToleranceConfig, beta, digamma, gamma, log_gamma, polygamma2
from .wco_norms import (
    TtNormBreakdown,
    F_eval,
    G_eval,
    R_project,
    hinf_bound_breakdown,
    hinf_lower_bound,
    hinf_upper_bound,
    quadratic_x0,
    threshold_tstar,
    tt_norm,
    tt_norm_integral,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BACKEND",
    "DomainError",
    "EvaluationError",
    "F_eval",
    "F_p_eval",
    "F_p_prime",
    "G_eval",
    "H_ps_eval",
    "IntegralResult",
    "NormEstimate",
    "QuadratureConfig",
    "R_project",
    "SpaceSpec",
    "TaylorFunction",
    "ToleranceConfig",
    "TtNormBreakdown",
    "VerificationReport",
    "WCOParams",
    "bergman_norm",
    "beta",
    "check_beta_bound",
    "check_lemma32",
    "digamma",
    "evaluate",
    "falpha_coeffs",
    "falpha_value",
    "gamma",
    "g_x_eval",
    "h_y_eval",
    "hilbert_coeffs",
    "hilbert_integral",
    "hinf_bound_breakdown",
    "hinf_lower_bound",
    "hinf_upper_bound",
    "integrate",
    "integrate_split",
    "korenblum_norm",
    "log_gamma",
    "polygamma2",
    "psi_alpha",
    "psi_p_eval",
    "quadratic_x0",
    "run_verification",
    "t0_root",
    "threshold_tstar",
    "tt_norm",
    "tt_norm_integral",
    "wco_apply",
]
