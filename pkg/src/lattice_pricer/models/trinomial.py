"""Classical and moment-matched trinomial steps (constant coefficients)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..config import PROBABILITY_SUM_TOL
from ..errors import DomainError, ParameterRegimeError, UnsupportedOperationError
from ..lattice import StepSpec, TimeGrid
from .base import LatticeModel

CLASSICAL = "classical"
NEW = "new"
ONE_THIRD = 1.0 / 3.0


@dataclass(frozen=True)
class TrinomialStep:
    up: float
    mid: float
    down: float
    prob_up: float
    prob_mid: float
    prob_down: float
    world: str
    variant: str

    def __post_init__(self):
        if not (0 < self.down < self.mid < self.up):
            raise ParameterRegimeError(
                f"Trinomial factors must satisfy 0 < down < mid < up, got {(self.down, self.mid, self.up)}"
            )
        probabilities = (self.prob_down, self.prob_mid, self.prob_up)
        if any(not 0.0 < p < 1.0 for p in probabilities):
            raise ParameterRegimeError(f"Trinomial probabilities {probabilities} outside (0, 1); reduce dt")
        if abs(math.fsum(probabilities) - 1.0) > PROBABILITY_SUM_TOL:
            raise ParameterRegimeError(f"Trinomial probabilities sum to {math.fsum(probabilities)}")

    def spec(self, t_end: float = 0.0, dt: float = 0.0) -> StepSpec:
        return StepSpec.trinomial(
            self.down, self.mid, self.up, self.prob_down, self.prob_mid, self.prob_up,
            t_end=t_end, dt=dt, world=self.world,
        )


def _check(sigma: float, dt: float) -> None:
    if not sigma > 0:
        raise DomainError(f"sigma must be > 0, got {sigma}")
    if not dt > 0:
        raise DomainError(f"dt must be > 0, got {dt}")


def classical_trinomial_step(r: float, sigma: float, dt: float) -> TrinomialStep:
    """Risk-neutral mean/variance fitted trinomial with middle probability 2/3."""
    _check(sigma, dt)
    centre = 1.0 + 1.5 * sigma * sigma * dt
    swing = sigma * math.sqrt(3.0 * dt)
    tilt = math.sqrt(dt / (12.0 * sigma * sigma)) * (r - 0.5 * sigma * sigma)
    return TrinomialStep(
        up=centre + swing,
        mid=1.0,
        down=centre - swing,
        prob_up=1.0 / 6.0 + tilt,
        prob_mid=2.0 / 3.0,
        prob_down=1.0 / 6.0 - tilt,
        world="risk-neutral",
        variant=CLASSICAL,
    )


def _new_trinomial(drift: float, sigma: float, dt: float, world: str) -> TrinomialStep:
    _check(sigma, dt)
    centre = 1.0 + (drift + 0.25 * sigma * sigma) * dt
    swing = math.sqrt(1.5) * sigma * math.sqrt(dt)
    return TrinomialStep(
        up=centre + swing,
        mid=1.0 + (drift - 0.5 * sigma * sigma) * dt,
        down=centre - swing,
        prob_up=ONE_THIRD,
        prob_mid=ONE_THIRD,
        prob_down=ONE_THIRD,
        world=world,
        variant=NEW,
    )


def new_trinomial_natural_step(mu: float, sigma: float, dt: float) -> TrinomialStep:
    """Equal-weight trinomial matching all moments of the GBM increment with drift mu."""
    return _new_trinomial(mu, sigma, dt, "natural")


def new_trinomial_risk_neutral_step(r: float, sigma: float, dt: float) -> TrinomialStep:
    """Risk-neutral counterpart: drift r in place of mu, probabilities still 1/3."""
    return _new_trinomial(r, sigma, dt, "risk-neutral")


class _ConstantTrinomialModel(LatticeModel):
    branches = 3
    supports_hedging = False

    def check_grid(self, grid: TimeGrid) -> None:
        if not self.market.is_constant:
            raise UnsupportedOperationError(f"Model '{self.name}' supports constant coefficients only")
        super().check_grid(grid)


class ClassicalTrinomialModel(_ConstantTrinomialModel):
    """Classical trinomial tree defined directly in the risk-neutral world."""

    name = "tri-classical"
    worlds = ("risk-neutral",)

    def step(self, t_end: float, dt: float, world: str = "risk-neutral") -> StepSpec:
        self.check_world(world)
        return classical_trinomial_step(self.market.rate_at(t_end), self.market.sigma_at(t_end), dt).spec(t_end, dt)


class NewTrinomialModel(_ConstantTrinomialModel):
    """Equal-probability trinomial tree fitting all moments, natural and risk-neutral."""

    name = "tri-new"

    def step(self, t_end: float, dt: float, world: str = "risk-neutral") -> StepSpec:
        self.check_world(world)
        sigma = self.market.sigma_at(t_end)
        if world == "natural":
            return new_trinomial_natural_step(self.market.mu_at(t_end), sigma, dt).spec(t_end, dt)
        return new_trinomial_risk_neutral_step(self.market.rate_at(t_end), sigma, dt).spec(t_end, dt)
