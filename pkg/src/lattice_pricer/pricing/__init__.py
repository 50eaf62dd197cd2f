"""Backward-induction pricing, hedge ratios and the path-enumeration oracle."""

from .backward import (
    PriceResult,
    hedge_report,
    price_european,
    price_model,
    replication_residuals,
    rollback,
    step_probabilities,
)
from .brute_force import brute_force_price
from .payoff import PAYOFF_KINDS, Payoff

__all__ = [
    "PriceResult",
    "hedge_report",
    "price_european",
    "price_model",
    "replication_residuals",
    "rollback",
    "step_probabilities",
    "brute_force_price",
    "PAYOFF_KINDS",
    "Payoff",
]
