"""Lattice models: CRR, KSRF and trinomial step constructors."""

from .base import LatticeModel
from .crr import (
    CRRModel,
    CRRStep,
    crr_factors,
    crr_hedge_ratio,
    crr_natural_prob,
    crr_risk_neutral_prob,
    crr_step,
)
from .factory import ModelFactory, get_model, get_model_info, list_models, register_model, unregister_model
from .ksrf import (
    KSRFModel,
    KSRFStep,
    ksrf_factors,
    ksrf_hedge_ratio,
    ksrf_risk_neutral_moments,
    ksrf_risk_neutral_prob,
    ksrf_step,
)
from .trinomial import (
    ClassicalTrinomialModel,
    NewTrinomialModel,
    TrinomialStep,
    classical_trinomial_step,
    new_trinomial_natural_step,
    new_trinomial_risk_neutral_step,
)

__all__ = [
    "LatticeModel",
    "CRRModel",
    "CRRStep",
    "crr_factors",
    "crr_hedge_ratio",
    "crr_natural_prob",
    "crr_risk_neutral_prob",
    "crr_step",
    "ModelFactory",
    "get_model",
    "get_model_info",
    "list_models",
    "register_model",
    "unregister_model",
    "KSRFModel",
    "KSRFStep",
    "ksrf_factors",
    "ksrf_hedge_ratio",
    "ksrf_risk_neutral_moments",
    "ksrf_risk_neutral_prob",
    "ksrf_step",
    "ClassicalTrinomialModel",
    "NewTrinomialModel",
    "TrinomialStep",
    "classical_trinomial_step",
    "new_trinomial_natural_step",
    "new_trinomial_risk_neutral_step",
]
