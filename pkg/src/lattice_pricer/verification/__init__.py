"""Moment checks, closed-form oracle, forward distributions and convergence studies."""

from .black_scholes import OPTION_KINDS, bs_price, bs_price_for_market
from .convergence import ConvergenceRow, compare_models, convergence_study, estimated_order
from .forward import TerminalDistribution, discounted_expectation, forward_probabilities
from .moments import (
    GBMMoment,
    MomentReport,
    gbm_moment,
    lattice_step_moment,
    logreturn_moments,
    moment_report,
    moment_table,
    shrink_ratios,
)

__all__ = [
    "OPTION_KINDS",
    "bs_price",
    "bs_price_for_market",
    "ConvergenceRow",
    "compare_models",
    "convergence_study",
    "estimated_order",
    "TerminalDistribution",
    "discounted_expectation",
    "forward_probabilities",
    "GBMMoment",
    "MomentReport",
    "gbm_moment",
    "lattice_step_moment",
    "logreturn_moments",
    "moment_report",
    "moment_table",
    "shrink_ratios",
]
