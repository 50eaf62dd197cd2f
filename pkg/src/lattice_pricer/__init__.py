"""Lattice Pricer - moment-matched binomial and trinomial option pricing trees."""

from .coefficients import (
    CoefficientCurve,
    MarketCoefficients,
    averaged_coefficients,
    evaluate,
    integrate,
    market_price_of_risk,
    risk_neutral_drift_shift,
    step_discount,
)
from .errors import (
    ConfigValidationError,
    DomainError,
    LatticePricingError,
    ParameterRegimeError,
    ResourceGuardError,
    ShapeError,
    UnsupportedOperationError,
)
from .lattice import (
    Lattice,
    StepSpec,
    TimeGrid,
    build_binomial,
    build_lattice,
    build_trinomial,
    recombination_residual,
)
from .models import LatticeModel, get_model, list_models, register_model, unregister_model
from .pricing import (
    Payoff,
    PriceResult,
    brute_force_price,
    hedge_report,
    price_european,
    price_model,
    replication_residuals,
)
from .verification import (
    ConvergenceRow,
    MomentReport,
    bs_price,
    convergence_study,
    forward_probabilities,
    gbm_moment,
    lattice_step_moment,
    logreturn_moments,
)

__all__ = [
    # Coefficients
    "CoefficientCurve",
    "MarketCoefficients",
    "averaged_coefficients",
    "evaluate",
    "integrate",
    "market_price_of_risk",
    "risk_neutral_drift_shift",
    "step_discount",

    # Errors
    "ConfigValidationError",
    "DomainError",
    "LatticePricingError",
    "ParameterRegimeError",
    "ResourceGuardError",
    "ShapeError",
    "UnsupportedOperationError",

    # Lattice
    "Lattice",
    "StepSpec",
    "TimeGrid",
    "build_binomial",
    "build_lattice",
    "build_trinomial",
    "recombination_residual",

    # Models
    "LatticeModel",
    "get_model",
    "list_models",
    "register_model",
    "unregister_model",

    # Pricing
    "Payoff",
    "PriceResult",
    "brute_force_price",
    "hedge_report",
    "price_european",
    "price_model",
    "replication_residuals",

    # Verification
    "ConvergenceRow",
    "MomentReport",
    "bs_price",
    "convergence_study",
    "forward_probabilities",
    "gbm_moment",
    "lattice_step_moment",
    "logreturn_moments",
]

__version__ = "0.1.0"
