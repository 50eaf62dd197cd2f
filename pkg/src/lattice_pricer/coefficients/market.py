"""Market coefficient triple (mu, sigma, r) and the quantities derived from it."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from ..errors import DomainError
from .curve import CoefficientCurve, evaluate, mean_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MarketCoefficients:
    """Drift, volatility and riskless rate curves of the one-stock, one-bond market."""

    mu: CoefficientCurve
    sigma: CoefficientCurve
    rate: CoefficientCurve

    def curves(self) -> Tuple[CoefficientCurve, ...]:
        return (self.mu, self.sigma, self.rate)

    @property
    def domain_end(self) -> float:
        return min(curve.domain_end for curve in self.curves())

    @property
    def is_constant(self) -> bool:
        return all(curve.is_constant for curve in self.curves())

    def sigma_at(self, t: float) -> float:
        value = evaluate(self.sigma, t)
        if value <= 0:
            raise DomainError(f"sigma(t) must be > 0, got {value} at t={t}")
        return value

    def rate_at(self, t: float) -> float:
        value = evaluate(self.rate, t)
        if value <= 0:
            raise DomainError(f"rate(t) must be > 0, got {value} at t={t}")
        return value

    def mu_at(self, t: float) -> float:
        return evaluate(self.mu, t)

    def check_on(self, times: Iterable[float]) -> Optional[float]:
        """Enforce sigma > 0 and r > 0 at every given time; return the first time with r >= mu, if any."""
        first_violation = None
        for t in times:
            self.sigma_at(t)
            self.rate_at(t)
            if first_violation is None and self.violates_drift_assumption(t):
                first_violation = t
        return first_violation

    def violates_drift_assumption(self, t: float) -> bool:
        """True when r(t) >= mu(t), outside the model's standing assumption r in (0, mu)."""
        return evaluate(self.rate, t) >= evaluate(self.mu, t)


def market_price_of_risk(mc: MarketCoefficients, t: float) -> float:
    """theta(t) = (mu(t) - r(t)) / sigma(t)."""
    sigma = mc.sigma_at(t)
    mu, r = evaluate(mc.mu, t), evaluate(mc.rate, t)
    if r >= mu:
        logger.debug("r=%s >= mu=%s at t=%s; market price of risk is not positive", r, mu, t)
    return (mu - r) / sigma


def risk_neutral_drift_shift(mc: MarketCoefficients, t: float) -> float:
    """Drift removed by the measure change dB^Q = dB + theta dt, i.e. theta(t)·sigma(t)."""
    return market_price_of_risk(mc, t) * mc.sigma_at(t)


def step_discount(mc: MarketCoefficients, t: float, dt: float) -> float:
    """One-step discount factor exp(-r(t)·dt)."""
    if dt < 0:
        raise DomainError(f"dt must be >= 0, got {dt}")
    if dt == 0:
        return 1.0
    return math.exp(-mc.rate_at(t) * dt)


def averaged_coefficients(mc: MarketCoefficients, horizon: float) -> Tuple[float, float]:
    """(r_bar, sigma_bar) with r_bar = (1/T)∫r and sigma_bar² = (1/T)∫sigma², exactly integrated."""
    r_bar = mean_value(mc.rate, horizon)
    if mc.sigma.kind == "constant":
        sigma_bar = mc.sigma.value
    else:
        sigma_bar = math.sqrt(mean_value(mc.sigma, horizon, squared=True))
    return r_bar, sigma_bar
