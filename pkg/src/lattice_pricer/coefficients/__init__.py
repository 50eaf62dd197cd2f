"""Time-dependent model coefficients."""

from .curve import CURVE_KINDS, CoefficientCurve, evaluate, integrate, mean_value
from .market import (
    MarketCoefficients,
    averaged_coefficients,
    market_price_of_risk,
    risk_neutral_drift_shift,
    step_discount,
)

__all__ = [
    "CURVE_KINDS",
    "CoefficientCurve",
    "evaluate",
    "integrate",
    "mean_value",
    "MarketCoefficients",
    "averaged_coefficients",
    "market_price_of_risk",
    "risk_neutral_drift_shift",
    "step_discount",
]
