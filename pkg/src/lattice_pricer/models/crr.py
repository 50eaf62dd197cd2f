"""Cox-Ross-Rubinstein tree with time-dependent coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..coefficients import MarketCoefficients
from ..errors import DomainError, ParameterRegimeError
from ..lattice import StepSpec
from .base import LatticeModel


@dataclass(frozen=True)
class CRRStep:
    """Up/down factors with natural probability p and risk-neutral probability q."""

    U: float
    D: float
    p_natural: float
    q_risk_neutral: float
    t: float
    dt: float

    def spec(self, world: str = "risk-neutral") -> StepSpec:
        prob_up = self.p_natural if world == "natural" else self.q_risk_neutral
        return StepSpec.binomial(self.D, self.U, prob_up, t_end=self.t, dt=self.dt, world=world)


def _check(sigma_t: float, dt: float) -> None:
    if not sigma_t > 0:
        raise DomainError(f"sigma must be > 0, got {sigma_t}")
    if not dt > 0:
        raise DomainError(f"dt must be > 0, got {dt}")


def crr_factors(sigma_t: float, dt: float):
    """U = exp(sigma·sqrt(dt)), D = 1/U."""
    _check(sigma_t, dt)
    up = math.exp(sigma_t * math.sqrt(dt))
    return up, 1.0 / up


def _half_plus_drift(drift: float, sigma_t: float, dt: float, label: str) -> float:
    _check(sigma_t, dt)
    prob = 0.5 + (drift - 0.5 * sigma_t * sigma_t) / (2.0 * sigma_t) * math.sqrt(dt)
    if not 0.0 < prob < 1.0:
        raise ParameterRegimeError(f"CRR {label} probability {prob} outside (0, 1); reduce dt (dt={dt})")
    return prob


def crr_natural_prob(mu_t: float, sigma_t: float, dt: float) -> float:
    """p = 1/2 + (mu - sigma²/2)/(2 sigma) · sqrt(dt)."""
    return _half_plus_drift(mu_t, sigma_t, dt, "natural")


def crr_risk_neutral_prob(r_t: float, sigma_t: float, dt: float) -> float:
    """q = 1/2 + (r - sigma²/2)/(2 sigma) · sqrt(dt); does not depend on mu or p."""
    return _half_plus_drift(r_t, sigma_t, dt, "risk-neutral")


def crr_hedge_ratio(g_up: float, g_down: float, s: float, sigma_t: float, dt: float, exact: bool = False) -> float:
    """Stock holding that makes the short-derivative portfolio riskless over one step.

    The default is the small-dt form (G+ - G-)/(2 S sigma sqrt(dt)); exact=True gives
    (G+ - G-)/(S (U - D)), which replicates both branches to rounding.
    """
    if not s > 0:
        raise DomainError(f"S must be > 0, got {s}")
    _check(sigma_t, dt)
    if exact:
        up, down = crr_factors(sigma_t, dt)
        return (g_up - g_down) / (s * (up - down))
    return (g_up - g_down) / (2.0 * s * sigma_t * math.sqrt(dt))


def crr_step(mc: MarketCoefficients, t_end: float, dt: float) -> CRRStep:
    """Factors and both probabilities for the step ending at t_end."""
    sigma = mc.sigma_at(t_end)
    up, down = crr_factors(sigma, dt)
    return CRRStep(
        U=up,
        D=down,
        p_natural=crr_natural_prob(mc.mu_at(t_end), sigma, dt),
        q_risk_neutral=crr_risk_neutral_prob(mc.rate_at(t_end), sigma, dt),
        t=t_end,
        dt=dt,
    )


class CRRModel(LatticeModel):
    """Time-dependent CRR binomial tree: U = exp(sigma sqrt(dt)), D = 1/U."""

    name = "crr-td"
    branches = 2
    supports_hedging = True

    def step(self, t_end: float, dt: float, world: str = "risk-neutral") -> StepSpec:
        self.check_world(world)
        return crr_step(self.market, t_end, dt).spec(world)

    def hedge_ratio(self, g_up: float, g_down: float, s: float, step: StepSpec, exact: bool = False) -> float:
        return crr_hedge_ratio(g_up, g_down, s, self.market.sigma_at(step.t_end), step.dt, exact=exact)
