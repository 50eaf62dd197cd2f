"""Exact path-enumeration oracle for small trees."""

from __future__ import annotations

import itertools
import math
from typing import Sequence

import numpy as np

from ..config import BRUTE_FORCE_MAX_BINOMIAL, BRUTE_FORCE_MAX_TRINOMIAL
from ..errors import DomainError, ResourceGuardError, ShapeError
from ..lattice import StepSpec, TimeGrid
from .payoff import Payoff


def brute_force_price(
    steps: Sequence[StepSpec], grid: TimeGrid, s0: float, payoff: Payoff, discounts: Sequence[float]
) -> float:
    """Sum over every branch path of path probability times discounted payoff.

    Path prices use the true path-ordered factor products, not canonical node values.
    """
    if not s0 > 0:
        raise DomainError(f"S0 must be > 0, got {s0}")
    if len(steps) != grid.steps or len(discounts) != grid.steps:
        raise ShapeError(f"Grid has {grid.steps} steps; got {len(steps)} specs and {len(discounts)} discounts")
    branches = steps[0].branches
    if any(step.branches != branches for step in steps):
        raise ShapeError("Mixed binomial and trinomial steps")
    limit = BRUTE_FORCE_MAX_BINOMIAL if branches == 2 else BRUTE_FORCE_MAX_TRINOMIAL
    if grid.steps > limit:
        raise ResourceGuardError(
            f"Path enumeration limited to {limit} steps for {branches}-branch trees, got {grid.steps}"
        )

    factors = np.array([step.factors for step in steps])
    probabilities = np.array([step.probabilities for step in steps])
    paths = np.array(list(itertools.product(range(branches), repeat=grid.steps)), dtype=int)
    levels = np.arange(grid.steps)

    path_prices = s0 * np.prod(factors[levels, paths], axis=1)
    path_probs = np.prod(probabilities[levels, paths], axis=1)
    discount = math.prod(float(d) for d in discounts)
    return discount * math.fsum(path_probs * payoff(path_prices))
