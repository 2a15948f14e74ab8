"""Exact and asymptotic analysis of non-negative walks ending at their maximum.

Exact quantities come back as ``fractions.Fraction`` / ``int``; asymptotic
quantities as floats, with digit-string variants where more precision is
wanted.
"""

from maxwalk._core import (
    ballot_cmp_csv,
    ballot_count,
    ballot_count_bruteforce,
    beta_digits,
    binom_c,
    central_binom_approx,
    cheb_poly,
    density,
    det_identity_check,
    enumerate_admissible,
    exact_shifted_moment,
    exact_total,
    expansion,
    expansion_eval,
    extremal_count,
    gf_coefficient,
    height_spectrum,
    local_limit,
    mellin_T,
    mellin_U,
    moment_leading,
    prob_height,
    run_suite,
    stirling_d,
    zeta_digits,
)

__all__ = [
    "ballot_cmp_csv",
    "ballot_count",
    "ballot_count_bruteforce",
    "beta_digits",
    "binom_c",
    "central_binom_approx",
    "cheb_poly",
    "density",
    "det_identity_check",
    "enumerate_admissible",
    "exact_shifted_moment",
    "exact_total",
    "expansion",
    "expansion_eval",
    "extremal_count",
    "gf_coefficient",
    "height_spectrum",
    "local_limit",
    "mellin_T",
    "mellin_U",
    "moment_leading",
    "prob_height",
    "run_suite",
    "stirling_d",
    "zeta_digits",
]
