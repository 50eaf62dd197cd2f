"""Factory for creating lattice models by name."""

import logging
from typing import Dict, List, Optional, Type

from ..coefficients import CoefficientCurve, MarketCoefficients
from ..errors import ConfigValidationError, DomainError
from .base import LatticeModel
from .crr import CRRModel
from .ksrf import KSRFModel
from .trinomial import ClassicalTrinomialModel, NewTrinomialModel

logger = logging.getLogger(__name__)

BUILTIN_MODELS = (CRRModel, KSRFModel, ClassicalTrinomialModel, NewTrinomialModel)


class ModelFactory:
    """Registry of lattice model classes keyed by their command-line name."""

    def __init__(self):
        self._models: Dict[str, Type[LatticeModel]] = {}
        for model_class in BUILTIN_MODELS:
            self.register_model(model_class)

    def register_model(self, model_class: Type[LatticeModel], replace: bool = False) -> None:
        """Register a LatticeModel subclass under its `name`; an existing name needs replace=True."""
        if not (isinstance(model_class, type) and issubclass(model_class, LatticeModel)):
            raise DomainError(f"{model_class!r} is not a LatticeModel subclass")
        name = model_class.name
        if not name:
            raise DomainError(f"{model_class.__name__} has no model name")
        if name in self._models and not replace:
            raise DomainError(f"Model '{name}' is already registered by {self._models[name].__name__}")
        self._models[name] = model_class
        logger.debug("Registered model: %s -> %s", name, model_class.__name__)

    def unregister_model(self, name: str) -> None:
        if name not in self._models:
            raise DomainError(f"Model '{name}' is not registered")
        del self._models[name]

    def create(
        self, name: str, market: MarketCoefficients, p_curve: Optional[CoefficientCurve] = None
    ) -> LatticeModel:
        """Instantiate a model on the given coefficients."""
        if name not in self._models:
            raise ConfigValidationError(
                f"Unknown model '{name}'. Available: {', '.join(self.model_names())}", field="model"
            )
        return self._models[name](market, p_curve)

    def model_names(self) -> List[str]:
        """Registered model names in registration order."""
        return list(self._models)

    def get_model_info(self, name: str) -> Dict:
        """Branch count, hedging support, worlds and the first docstring line of a model."""
        if name not in self._models:
            raise ConfigValidationError(f"Unknown model '{name}'", field="model")
        model_class = self._models[name]
        doc = (model_class.__doc__ or "No documentation available").strip().splitlines()[0]
        return {
            "name": name,
            "class_name": model_class.__name__,
            "branches": model_class.branches,
            "supports_hedging": model_class.supports_hedging,
            "worlds": list(model_class.worlds),
            "description": doc,
        }


_model_factory = ModelFactory()


def get_model(
    name: str, market: MarketCoefficients, p_curve: Optional[CoefficientCurve] = None
) -> LatticeModel:
    """Create a model instance using the global factory."""
    return _model_factory.create(name, market, p_curve)


def register_model(model_class: Type[LatticeModel], replace: bool = False) -> None:
    """Make a model class available to get_model, the run config and the CLI."""
    _model_factory.register_model(model_class, replace=replace)


def unregister_model(name: str) -> None:
    _model_factory.unregister_model(name)


def list_models() -> List[str]:
    return _model_factory.model_names()


def get_model_info(name: str) -> Dict:
    return _model_factory.get_model_info(name)
