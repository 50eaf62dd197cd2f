"""Exception hierarchy shared by the library and the command line."""

from typing import List, Optional


class LatticePricingError(Exception):
    """Base class for every error raised by lattice_pricer."""

    exit_code = 1


class DomainError(LatticePricingError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ParameterRegimeError(LatticePricingError, ValueError):
    """A probability or branch factor left its admissible range; shrink dt."""

    exit_code = 4


class ShapeError(LatticePricingError, ValueError):
    """Step specs, lattices or per-level inputs of inconsistent shape."""


class ResourceGuardError(LatticePricingError, ValueError):
    """The brute-force oracle was asked to enumerate too many paths."""


class UnsupportedOperationError(LatticePricingError):
    """Operation not defined for the chosen model."""

    exit_code = 3


class ConfigValidationError(LatticePricingError, ValueError):
    """Run configuration failed validation."""

    exit_code = 2

    def __init__(self, message: str, field: Optional[str] = None, results: Optional[List] = None):
        super().__init__(message)
        self.field = field
        self.results = results or []
