"""Lattice price convergence against a closed-form oracle."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from ..config import MAX_WORKERS
from ..errors import DomainError
from ..lattice import TimeGrid
from ..models.base import LatticeModel
from ..pricing import Payoff, price_model

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvergenceRow:
    steps: int
    lattice_price: float
    oracle_price: float
    abs_error: float
    order: Optional[float] = None
    model: str = ""


def estimated_order(prev_steps: int, prev_error: float, steps: int, error: float) -> Optional[float]:
    """log(err_prev/err) / log(N/N_prev); log2 of the error ratio for a doubling."""
    if steps == prev_steps or prev_error <= 0 or error <= 0:
        return None
    return math.log(prev_error / error) / math.log(steps / prev_steps)


def convergence_study(
    model: LatticeModel,
    s0: float,
    maturity: float,
    ns: Sequence[int],
    payoff: Payoff,
    oracle_price: float,
    max_workers: Optional[int] = None,
) -> List[ConvergenceRow]:
    """One row per step count with the error against the oracle and an order estimate."""
    ns = list(ns)
    if not ns:
        raise DomainError("At least one step count is required")
    if any(b < a for a, b in zip(ns, ns[1:])):
        raise DomainError(f"Step counts must be ascending, got {ns}")

    def run(steps: int) -> float:
        started = time.perf_counter()
        price = price_model(model, s0, TimeGrid(maturity, steps), payoff).root_value
        logger.debug("%s N=%s price=%s in %.3fs", model.name, steps, price, time.perf_counter() - started)
        return price

    workers = max_workers or MAX_WORKERS
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            prices = list(pool.map(run, ns))
    else:
        prices = [run(steps) for steps in ns]

    rows: List[ConvergenceRow] = []
    for steps, price in zip(ns, prices):
        error = abs(price - oracle_price)
        order = estimated_order(rows[-1].steps, rows[-1].abs_error, steps, error) if rows else None
        rows.append(ConvergenceRow(steps, price, oracle_price, error, order, model.name))
    return rows


def compare_models(
    models: Dict[str, LatticeModel],
    s0: float,
    maturity: float,
    ns: Sequence[int],
    payoff: Payoff,
    oracle_price: float,
    max_workers: Optional[int] = None,
) -> List[ConvergenceRow]:
    """Convergence rows for several models, grouped by model in the given order."""
    rows: List[ConvergenceRow] = []
    for model in models.values():
        rows.extend(convergence_study(model, s0, maturity, ns, payoff, oracle_price, max_workers))
    return rows
