from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import List, Optional, Set

import numpy as np

from ..coefficients import CoefficientCurve, MarketCoefficients, step_discount
from ..errors import DomainError, UnsupportedOperationError
from ..lattice import MOMENT_MATCHED, Lattice, StepSpec, TimeGrid, build_lattice

logger = logging.getLogger(__name__)


class LatticeModel(ABC):
    """Abstract interface for models that turn market coefficients into lattice steps."""

    name: str = ""
    branches: int = 2
    supports_hedging: bool = False
    worlds = ("natural", "risk-neutral")

    def __init__(self, market: MarketCoefficients, p_curve: Optional[CoefficientCurve] = None):
        self.market = market
        self.p_curve = p_curve
        self._warned: Set[str] = set()

    @abstractmethod
    def step(self, t_end: float, dt: float, world: str = "risk-neutral") -> StepSpec:
        """StepSpec for the step ending at t_end, probabilities of the requested world."""
        raise NotImplementedError

    def check_grid(self, grid: TimeGrid) -> None:
        """Coefficient domain and positivity checks on every grid time."""
        if self.market.domain_end < grid.maturity:
            raise DomainError(
                f"Coefficient curves end at t={self.market.domain_end}, before the maturity {grid.maturity}"
            )
        violation = self.market.check_on(grid.times())
        if violation is not None:
            self.warn_once(
                "drift", "⚠️  r(t) >= mu(t) at t=%s; pricing stays defined but the market assumption r < mu fails", violation
            )

    def warn_once(self, key: str, message: str, *args) -> None:
        """Log a warning the first time `key` comes up for this model instance."""
        if key in self._warned:
            logger.debug(message, *args)
            return
        self._warned.add(key)
        logger.warning(message, *args)

    def check_world(self, world: str) -> None:
        if world not in self.worlds:
            raise UnsupportedOperationError(f"Model '{self.name}' is not defined in the {world} world")

    def steps(self, grid: TimeGrid, world: str = "risk-neutral") -> List[StepSpec]:
        """Per-level step specs; step n advances level n to n+1 with coefficients at its end time."""
        self.check_world(world)
        self.check_grid(grid)
        return [self.step(grid.step_end(n), grid.dt, world) for n in range(grid.steps)]

    def build(
        self, s0: float, grid: TimeGrid, world: str = "risk-neutral", convention: str = MOMENT_MATCHED
    ) -> Lattice:
        return build_lattice(s0, grid, self.steps(grid, world), convention)

    def discounts(self, grid: TimeGrid) -> np.ndarray:
        """Per-step discount factors exp(-r(t_{n+1})·dt)."""
        return np.array([step_discount(self.market, grid.step_end(n), grid.dt) for n in range(grid.steps)])

    def require_hedging(self) -> None:
        if not self.supports_hedging:
            raise UnsupportedOperationError(
                f"Model '{self.name}' has no replicating hedge: with one stock and {self.branches} branch "
                "outcomes per step the market is incomplete"
            )

    def hedge_ratio(self, g_up: float, g_down: float, s: float, step: StepSpec, exact: bool = False) -> float:
        """Stock holding replicating the derivative over one step from node price s."""
        self.require_hedging()
        raise NotImplementedError
