"""Weighted l1 sparse recovery.

Supports are 0-based index sequences; weights are 1-D float arrays with every
entry >= 1.
"""

from ._core import (
    InfeasibleStall,
    SolveResult,
    ValidationError,
    add_noise,
    empirical_dual_width,
    empirical_mean_length,
    gamma_two_weight,
    gamma_uniform,
    gaussian_matrix,
    gaussian_mean_length,
    gen_weights,
    min_measurements,
    phase_transition,
    sample_complexity_lemma,
    sample_complexity_theorem,
    sample_signal,
    soft_threshold,
    soft_threshold_second_moment,
    solve,
    weighted_cardinality,
    weighted_l1_norm,
    width_bound,
)

__all__ = [
    "InfeasibleStall",
    "SolveResult",
    "ValidationError",
    "add_noise",
    "empirical_dual_width",
    "empirical_mean_length",
    "gamma_two_weight",
    "gamma_uniform",
    "gaussian_matrix",
    "gaussian_mean_length",
    "gen_weights",
    "min_measurements",
    "phase_transition",
    "sample_complexity_lemma",
    "sample_complexity_theorem",
    "sample_signal",
    "soft_threshold",
    "soft_threshold_second_moment",
    "solve",
    "weighted_cardinality",
    "weighted_l1_norm",
    "width_bound",
]
