"""Time grid and single-step branch factors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..config import PROBABILITY_SUM_TOL
from ..errors import DomainError, ParameterRegimeError, ShapeError

WORLDS = ("natural", "risk-neutral")


@dataclass(frozen=True)
class TimeGrid:
    """Trading horizon T split into N equal steps of length dt = T/N."""

    maturity: float
    steps: int

    def __post_init__(self):
        if not (self.maturity > 0) or not math.isfinite(self.maturity):
            raise DomainError(f"maturity must be a finite positive number, got {self.maturity}")
        if isinstance(self.steps, bool) or not isinstance(self.steps, (int, np.integer)) or self.steps < 1:
            raise DomainError(f"steps must be an integer >= 1, got {self.steps}")

    @property
    def dt(self) -> float:
        return self.maturity / self.steps

    def time(self, n: int) -> float:
        """Time of level n; level N lands on the maturity exactly."""
        if n == self.steps:
            return self.maturity
        return self.maturity * n / self.steps

    def step_end(self, n: int) -> float:
        """End time of the step advancing level n to n+1."""
        return self.time(n + 1)

    def times(self) -> np.ndarray:
        return np.array([self.time(n) for n in range(self.steps + 1)])


@dataclass(frozen=True)
class StepSpec:
    """Branch factors (ordered down -> [mid] -> up) and their probabilities for one step."""

    factors: Tuple[float, ...]
    probabilities: Tuple[float, ...]
    t_end: float = 0.0
    dt: float = 0.0
    world: str = "risk-neutral"

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(float(f) for f in self.factors))
        object.__setattr__(self, "probabilities", tuple(float(p) for p in self.probabilities))
        if len(self.factors) not in (2, 3):
            raise ShapeError(f"A step has 2 or 3 branches, got {len(self.factors)}")
        if len(self.probabilities) != len(self.factors):
            raise ShapeError(f"{len(self.factors)} factors but {len(self.probabilities)} probabilities")
        if self.world not in WORLDS:
            raise DomainError(f"Unknown world '{self.world}'. Available: {', '.join(WORLDS)}")
        if any(not (f > 0) for f in self.factors):
            raise ParameterRegimeError(f"Branch factors must be > 0, got {self.factors}")
        if any(f1 < f0 for f0, f1 in zip(self.factors, self.factors[1:])):
            raise ShapeError(f"Branch factors must be ordered down to up, got {self.factors}")
        if any(not (0.0 < p < 1.0) for p in self.probabilities):
            raise ParameterRegimeError(f"Branch probabilities must lie in (0, 1), got {self.probabilities}")
        if abs(math.fsum(self.probabilities) - 1.0) > PROBABILITY_SUM_TOL:
            raise ParameterRegimeError(f"Branch probabilities must sum to 1, got {math.fsum(self.probabilities)}")

    @classmethod
    def binomial(cls, down: float, up: float, prob_up: float, **kwargs) -> "StepSpec":
        return cls(factors=(down, up), probabilities=(1.0 - prob_up, prob_up), **kwargs)

    @classmethod
    def trinomial(
        cls, down: float, mid: float, up: float, prob_down: float, prob_mid: float, prob_up: float, **kwargs
    ) -> "StepSpec":
        return cls(factors=(down, mid, up), probabilities=(prob_down, prob_mid, prob_up), **kwargs)

    @property
    def branches(self) -> int:
        return len(self.factors)

    @property
    def is_binomial(self) -> bool:
        return self.branches == 2

    @property
    def down(self) -> float:
        return self.factors[0]

    @property
    def up(self) -> float:
        return self.factors[-1]

    @property
    def mid(self) -> float:
        if self.is_binomial:
            raise ShapeError("Binomial steps have no middle branch")
        return self.factors[1]

    @property
    def prob_up(self) -> float:
        return self.probabilities[-1]

    @property
    def prob_down(self) -> float:
        return self.probabilities[0]

    def mean_factor(self) -> float:
        return math.fsum(p * f for p, f in zip(self.probabilities, self.factors))
