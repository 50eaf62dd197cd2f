"""KSRF binomial tree with time-dependent coefficients and an exogenous p(t)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ..coefficients import CoefficientCurve, MarketCoefficients, evaluate, market_price_of_risk
from ..config import DEFAULT_KSRF_P, KSRF_P_COMFORT_BAND
from ..errors import DomainError, ParameterRegimeError
from ..lattice import StepSpec
from .base import LatticeModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KSRFStep:
    """Asymmetric moment-matched factors with natural p and risk-neutral q*."""

    u_factor: float
    d_factor: float
    p_natural: float
    q_star: float
    theta: float
    t: float
    dt: float

    def spec(self, world: str = "risk-neutral") -> StepSpec:
        prob_up = self.p_natural if world == "natural" else self.q_star
        return StepSpec.binomial(self.d_factor, self.u_factor, prob_up, t_end=self.t, dt=self.dt, world=world)


def _check_p(p_t: float) -> None:
    if not 0.0 < p_t < 1.0:
        raise DomainError(f"KSRF probability p must lie in (0, 1), got {p_t}")


def _comfortable(p_t: float) -> bool:
    low, high = KSRF_P_COMFORT_BAND
    return low <= p_t <= high


def ksrf_factors(mu_t: float, sigma_t: float, p_t: float, dt: float) -> Tuple[float, float]:
    """up = 1 + mu dt + sqrt((1-p)/p) sigma sqrt(dt), down = 1 + mu dt - sqrt(p/(1-p)) sigma sqrt(dt)."""
    _check_p(p_t)
    if not sigma_t > 0:
        raise DomainError(f"sigma must be > 0, got {sigma_t}")
    if not dt > 0:
        raise DomainError(f"dt must be > 0, got {dt}")
    centre = 1.0 + mu_t * dt
    swing = sigma_t * math.sqrt(dt)
    up = centre + math.sqrt((1.0 - p_t) / p_t) * swing
    down = centre - math.sqrt(p_t / (1.0 - p_t)) * swing
    if down <= 0:
        raise ParameterRegimeError(f"KSRF down factor {down} <= 0 for p={p_t}, dt={dt}; reduce dt")
    return up, down


def ksrf_risk_neutral_prob(p_t: float, theta_t: float, dt: float) -> float:
    """q* = p - theta · sqrt((1-p) p dt), continuous in p."""
    _check_p(p_t)
    q_star = p_t - theta_t * math.sqrt((1.0 - p_t) * p_t * dt)
    if not 0.0 < q_star < 1.0:
        raise ParameterRegimeError(f"KSRF risk-neutral probability {q_star} outside (0, 1) for p={p_t}; reduce dt")
    return q_star


def ksrf_hedge_ratio(g_up: float, g_down: float, s: float, sigma_t: float, p_t: float, dt: float) -> float:
    """Psi = (G+ - G-)/(S sigma sqrt(dt)) · sqrt((1-p) p)."""
    if not s > 0:
        raise DomainError(f"S must be > 0, got {s}")
    if not sigma_t > 0:
        raise DomainError(f"sigma must be > 0, got {sigma_t}")
    _check_p(p_t)
    return (g_up - g_down) / (s * sigma_t * math.sqrt(dt)) * math.sqrt((1.0 - p_t) * p_t)


def ksrf_step(mc: MarketCoefficients, p_curve: CoefficientCurve, t_end: float, dt: float) -> KSRFStep:
    """Factors, p and q* for the step ending at t_end; p is read at t_end for both uses."""
    sigma = mc.sigma_at(t_end)
    p_t = evaluate(p_curve, t_end)
    if not _comfortable(p_t):
        logger.debug("KSRF p=%s at t=%s gives strongly skewed factors", p_t, t_end)
    up, down = ksrf_factors(mc.mu_at(t_end), sigma, p_t, dt)
    theta = market_price_of_risk(mc, t_end)
    return KSRFStep(
        u_factor=up,
        d_factor=down,
        p_natural=p_t,
        q_star=ksrf_risk_neutral_prob(p_t, theta, dt),
        theta=theta,
        t=t_end,
        dt=dt,
    )


def ksrf_risk_neutral_moments(step: KSRFStep) -> Tuple[float, float]:
    """Mean and variance of the one-step factor under q*."""
    q = step.q_star
    mean = q * step.u_factor + (1.0 - q) * step.d_factor
    variance = q * (1.0 - q) * (step.u_factor - step.d_factor) ** 2
    return mean, variance


class KSRFModel(LatticeModel):
    """Time-dependent KSRF binomial tree matching all moments of the Ito increments."""

    name = "ksrf-td"
    branches = 2
    supports_hedging = True

    def __init__(self, market: MarketCoefficients, p_curve: Optional[CoefficientCurve] = None):
        super().__init__(market, p_curve or CoefficientCurve.constant(DEFAULT_KSRF_P))

    def check_grid(self, grid) -> None:
        super().check_grid(grid)
        if self.p_curve.domain_end < grid.maturity:
            raise DomainError(f"p curve ends at t={self.p_curve.domain_end}, before the maturity {grid.maturity}")
        for n in range(grid.steps):
            t_end = grid.step_end(n)
            p_t = evaluate(self.p_curve, t_end)
            if not _comfortable(p_t):
                self.warn_once("skewed-p", "⚠️  KSRF p=%s at t=%s gives strongly skewed factors", p_t, t_end)
                break

    def ksrf_step(self, t_end: float, dt: float) -> KSRFStep:
        return ksrf_step(self.market, self.p_curve, t_end, dt)

    def step(self, t_end: float, dt: float, world: str = "risk-neutral") -> StepSpec:
        self.check_world(world)
        return self.ksrf_step(t_end, dt).spec(world)

    def hedge_ratio(self, g_up: float, g_down: float, s: float, step: StepSpec, exact: bool = False) -> float:
        return ksrf_hedge_ratio(
            g_up, g_down, s, self.market.sigma_at(step.t_end), evaluate(self.p_curve, step.t_end), step.dt
        )
