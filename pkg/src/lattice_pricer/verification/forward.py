"""Forward induction of node probabilities on a recombined lattice."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import ShapeError
from ..lattice import Lattice
from ..pricing.payoff import Payoff


@dataclass(frozen=True)
class TerminalDistribution:
    prices: np.ndarray
    probabilities: np.ndarray

    def pairs(self) -> List[Tuple[float, float]]:
        return [(float(s), float(p)) for s, p in zip(self.prices, self.probabilities)]

    def moment(self, zeta: float = 1.0) -> float:
        """Sum of probability · S^zeta over the terminal nodes."""
        return math.fsum(self.probabilities * self.prices ** zeta)

    def expectation(self, payoff: Payoff) -> float:
        return math.fsum(self.probabilities * payoff(self.prices))


def forward_probabilities(lattice: Lattice, probs: Sequence) -> TerminalDistribution:
    """Distribution of the terminal node price reached through the lattice."""
    probs = np.asarray(probs, dtype=float)
    branches = 2 if lattice.is_binomial else 3
    if probs.shape != (lattice.grid.steps, branches):
        raise ShapeError(f"Expected probabilities of shape {(lattice.grid.steps, branches)}, got {probs.shape}")

    weights = np.ones(1)
    for n in range(lattice.grid.steps):
        nxt = np.zeros(lattice.width(n + 1))
        for branch in range(branches):
            nxt[branch:branch + weights.size] += weights * probs[n, branch]
        weights = nxt
    return TerminalDistribution(prices=lattice.terminal(), probabilities=weights)


def discounted_expectation(distribution: TerminalDistribution, payoff: Payoff, discounts: Sequence[float]) -> float:
    """Forward-side price: prod(discounts) · E[g(S_N)]."""
    return math.prod(float(d) for d in discounts) * distribution.expectation(payoff)
