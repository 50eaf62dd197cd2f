"""Backward-induction valuation and per-node hedge ratios."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ShapeError, UnsupportedOperationError
from ..lattice import Lattice, TimeGrid
from ..models.base import LatticeModel
from .payoff import Payoff

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PriceResult:
    """Root value plus optionally retained node values (levels 0..N) and hedge ratios (levels 0..N-1)."""

    root_value: float
    values: Optional[Tuple[np.ndarray, ...]] = None
    hedge_ratios: Optional[Tuple[np.ndarray, ...]] = None


def step_probabilities(lattice: Lattice) -> np.ndarray:
    """Per-level branch probabilities carried by the lattice's step specs, shape (N, branches)."""
    return np.array([step.probabilities for step in lattice.steps], dtype=float)


def _as_inputs(lattice: Lattice, probs, discounts) -> Tuple[np.ndarray, np.ndarray]:
    n_steps = lattice.grid.steps
    branches = 2 if lattice.is_binomial else 3
    probs = np.asarray(probs, dtype=float)
    discounts = np.asarray(discounts, dtype=float)
    if probs.shape != (n_steps, branches):
        raise ShapeError(f"Expected probabilities of shape {(n_steps, branches)}, got {probs.shape}")
    if discounts.shape != (n_steps,):
        raise ShapeError(f"Expected {n_steps} discount factors, got shape {discounts.shape}")
    return probs, discounts


def rollback(values: np.ndarray, probs: np.ndarray, discount: float, binomial: bool) -> np.ndarray:
    """Discounted probability-weighted sum of each node's children."""
    if binomial:
        return discount * (probs[0] * values[:-1] + probs[1] * values[1:])
    return discount * (probs[0] * values[:-2] + probs[1] * values[1:-1] + probs[2] * values[2:])


def price_european(
    lattice: Lattice,
    risk_neutral_probs: Sequence,
    discounts: Sequence[float],
    payoff: Payoff,
    keep_values: bool = False,
) -> PriceResult:
    """Value a terminal payoff by backward induction under the given step probabilities."""
    probs, discounts = _as_inputs(lattice, risk_neutral_probs, discounts)
    values = payoff(lattice.terminal())
    kept: List[np.ndarray] = [values]
    for n in range(lattice.grid.steps - 1, -1, -1):
        values = rollback(values, probs[n], discounts[n], lattice.is_binomial)
        if keep_values:
            kept.append(values)
    logger.debug("Backward induction done: N=%s root=%s", lattice.grid.steps, values[0])
    return PriceResult(
        root_value=float(values[0]),
        values=tuple(reversed(kept)) if keep_values else None,
    )


def hedge_report(
    lattice: Lattice,
    probs: Sequence,
    discounts: Sequence[float],
    payoff: Payoff,
    model: LatticeModel,
    exact: bool = False,
) -> PriceResult:
    """Price with retained values and a replicating hedge ratio at every non-terminal node.

    With the same factors on every step the model's own hedge formula is used. Otherwise a
    node's children are not S·up and S·down, so the ratio is taken against the child node
    prices, (G+ - G-) / (S+ - S-), and `exact` has no effect.
    """
    model.require_hedging()
    if not lattice.is_binomial:
        raise UnsupportedOperationError(
            "Hedge ratios need a binomial lattice; the one-stock trinomial market is incomplete"
        )
    result = price_european(lattice, probs, discounts, payoff, keep_values=True)
    ratios = []
    children_prices = lattice.level(0)
    for n in range(lattice.grid.steps):
        prices, children_prices = children_prices, lattice.level(n + 1)
        children = result.values[n + 1]
        if lattice.has_constant_factors:
            step = lattice.steps[n]
            ratios.append(np.array([
                model.hedge_ratio(float(children[j + 1]), float(children[j]), float(prices[j]), step, exact=exact)
                for j in range(n + 1)
            ]))
        else:
            ratios.append((children[1:] - children[:-1]) / (children_prices[1:] - children_prices[:-1]))
    if not lattice.has_constant_factors:
        logger.debug("Hedge ratios taken from child node prices: N=%s", lattice.grid.steps)
    return PriceResult(root_value=result.root_value, values=result.values, hedge_ratios=tuple(ratios))


def replication_residuals(lattice: Lattice, result: PriceResult) -> List[np.ndarray]:
    """Per-node |(-G+ + Psi S+) - (-G- + Psi S-)| scaled by max(|G+|, |G-|, 1), S± the child node prices."""
    if result.values is None or result.hedge_ratios is None:
        raise ShapeError("Replication check needs retained values and hedge ratios")
    residuals = []
    for n, ratios in enumerate(result.hedge_ratios):
        children_prices = lattice.level(n + 1)
        s_down, s_up = children_prices[:-1], children_prices[1:]
        g_down, g_up = result.values[n + 1][:-1], result.values[n + 1][1:]
        gap = np.abs((-g_up + ratios * s_up) - (-g_down + ratios * s_down))
        residuals.append(gap / np.maximum(np.maximum(np.abs(g_up), np.abs(g_down)), 1.0))
    return residuals


def price_model(
    model: LatticeModel, s0: float, grid: TimeGrid, payoff: Payoff, keep_values: bool = False
) -> PriceResult:
    """Build the model's risk-neutral lattice and price the payoff on it."""
    lattice = model.build(s0, grid, "risk-neutral")
    return price_european(lattice, step_probabilities(lattice), model.discounts(grid), payoff, keep_values)
