"""Analytic GBM moments and one-step lattice moment comparisons."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from ..errors import DomainError, ShapeError
from ..lattice import StepSpec


class GBMMoment(NamedTuple):
    exact: float
    first_order: float


@dataclass(frozen=True)
class MomentReport:
    """One-step moment of order zeta: lattice value against the GBM value."""

    zeta: float
    lattice_moment: float
    analytic_moment: float
    residual: float
    dt: float
    exact_moment: float = math.nan

    @property
    def exact_residual(self) -> float:
        return abs(self.lattice_moment - self.exact_moment)


def gbm_moment(zeta: float, mu: float, sigma: float, dt: float) -> GBMMoment:
    """E[(S(dt)/S(0))^zeta] for GBM: exact exp(zeta mu dt + zeta(zeta-1) sigma² dt/2) and its first-order form."""
    if zeta < 0:
        raise DomainError(f"Moment order must be >= 0, got {zeta}")
    exponent = zeta * (mu + 0.5 * (zeta - 1.0) * sigma * sigma) * dt
    return GBMMoment(exact=math.exp(exponent), first_order=1.0 + exponent)


def lattice_step_moment(step: StepSpec, zeta: float) -> float:
    """Sum over branches of probability · factor^zeta."""
    if zeta < 0:
        raise DomainError(f"Moment order must be >= 0, got {zeta}")
    return math.fsum(p * f ** zeta for p, f in zip(step.probabilities, step.factors))


def moment_report(step: StepSpec, zeta: float, drift: float, sigma: float) -> MomentReport:
    """Compare a step's moment with the GBM moment of the given drift (mu natural, r risk-neutral)."""
    analytic = gbm_moment(zeta, drift, sigma, step.dt)
    lattice = lattice_step_moment(step, zeta)
    return MomentReport(
        zeta=zeta,
        lattice_moment=lattice,
        analytic_moment=analytic.first_order,
        residual=abs(lattice - analytic.first_order),
        dt=step.dt,
        exact_moment=analytic.exact,
    )


def moment_table(step: StepSpec, zetas: Sequence[float], drift: float, sigma: float) -> List[MomentReport]:
    return [moment_report(step, zeta, drift, sigma) for zeta in zetas]


def logreturn_moments(step: StepSpec) -> Tuple[float, float]:
    """Exact two-point mean and variance of ln(factor) under the step's probabilities."""
    if not step.is_binomial:
        raise ShapeError("Log-return moments are defined for binomial steps")
    p = step.prob_up
    log_up, log_down = math.log(step.up), math.log(step.down)
    mean = p * log_up + (1.0 - p) * log_down
    variance = p * (1.0 - p) * (log_up - log_down) ** 2
    return mean, variance


def shrink_ratios(residuals: Sequence[float]) -> List[float]:
    """Ratios residual[k] / residual[k+1] across successively smaller dt."""
    return [a / b if b > 0 else math.inf for a, b in zip(residuals, residuals[1:])]
