"""Validation module for run configurations."""

from .config_validator import RunConfigValidator, validate_run_config
from .validation_result import ValidationResult
from .validation_rule import ValidationRule

__all__ = [
    "ValidationRule",
    "ValidationResult",
    "RunConfigValidator",
    "validate_run_config",
]
