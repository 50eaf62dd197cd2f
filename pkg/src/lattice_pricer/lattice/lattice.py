"""Recombining lattices with canonical node values."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..errors import DomainError, ShapeError
from .grid import StepSpec, TimeGrid

logger = logging.getLogger(__name__)

BINOMIAL = "binomial"
TRINOMIAL = "trinomial"

MOMENT_MATCHED = "moment-matched"
UPS_FIRST = "ups-first"
CONVENTIONS = (MOMENT_MATCHED, UPS_FIRST)


def _same_factors(steps: Sequence[StepSpec]) -> bool:
    first = steps[0].factors if steps else ()
    return all(step.factors == first for step in steps)


def _moment_matched_levels(steps: Sequence[StepSpec]) -> Tuple[np.ndarray, float]:
    """Per-level log-centres and the shared log-swing for binomial steps with varying factors.

    Every level uses the quadratic mean H of all step log-swings ln(up_k/down_k), so each node
    moves to its children by the same two factors and a node's successors never depend on j.
    The centre c_n makes the expected level-n price under the steps' own probabilities equal
    S0 times the product of the one-step mean factors.
    """
    log_swings = np.array([math.log(s.up / s.down) for s in steps])
    swing = float(np.sqrt(np.mean(log_swings ** 2)))
    half = 0.5 * swing
    growth = [math.log(s.mean_factor()) - math.log(s.prob_up * math.exp(half) + s.prob_down * math.exp(-half))
              for s in steps]
    centre = np.concatenate(([0.0], np.cumsum(growth)))
    return centre, swing


@dataclass(frozen=True)
class Lattice:
    """Node prices per level, computed on demand from the per-level step specs.

    Binomial node (n, j), j = 0..n up-moves: with identical factors on every step this is
    S0 · up^j · down^(n-j). Varying factors use the moment-matched convention
    S0 · exp(c_n + (j - n/2) · H), one swing H for every level, unless the "ups-first" path value
    S0 · up_1···up_j · down_{j+1}···down_n is requested. Trinomial node (n, j), j = -n..n,
    takes S0 · up^j · mid^(n-j) for j >= 0 and S0 · down^|j| · mid^(n-|j|) for j < 0.
    Every convention makes the lattice exactly recombining.
    """

    s0: float
    grid: TimeGrid
    steps: Tuple[StepSpec, ...]
    kind: str
    convention: str = MOMENT_MATCHED
    _ups: np.ndarray = field(init=False, repr=False, compare=False)
    _downs: np.ndarray = field(init=False, repr=False, compare=False)
    _centres: Optional[np.ndarray] = field(init=False, repr=False, compare=False)
    _swing: Optional[float] = field(init=False, repr=False, compare=False)
    _constant: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise DomainError(f"Unknown node convention '{self.convention}'. Available: {', '.join(CONVENTIONS)}")
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "_ups", np.array([s.up for s in self.steps], dtype=float))
        object.__setattr__(self, "_downs", np.array([s.down for s in self.steps], dtype=float))
        constant = _same_factors(self.steps)
        centres = swing = None
        if self.kind == BINOMIAL and self.convention == MOMENT_MATCHED and not constant:
            centres, swing = _moment_matched_levels(self.steps)
        object.__setattr__(self, "_centres", centres)
        object.__setattr__(self, "_swing", swing)
        object.__setattr__(self, "_constant", constant)

    @property
    def levels_count(self) -> int:
        return self.grid.steps + 1

    @property
    def is_binomial(self) -> bool:
        return self.kind == BINOMIAL

    @property
    def is_path_product(self) -> bool:
        """True when every node equals a product of step factors."""
        return self._swing is None

    @property
    def has_constant_factors(self) -> bool:
        """True when every step carries the same factors, so each child is S · factor."""
        return self._constant

    def width(self, n: int) -> int:
        return n + 1 if self.is_binomial else 2 * n + 1

    def indices(self, n: int) -> np.ndarray:
        """Node labels j at level n."""
        return np.arange(0, n + 1) if self.is_binomial else np.arange(-n, n + 1)

    def level(self, n: int) -> np.ndarray:
        """Node prices at level n, strictly increasing in j for strictly increasing factors."""
        if not 0 <= n <= self.grid.steps:
            raise ShapeError(f"Level {n} outside 0..{self.grid.steps}")
        if not self.is_binomial:
            step = self.steps[0]
            k = np.arange(0, n + 1, dtype=float)
            upper = self.s0 * np.power(step.up, k) * np.power(step.mid, n - k)
            lower = self.s0 * np.power(step.down, k[:0:-1]) * np.power(step.mid, n - k[:0:-1])
            return np.concatenate((lower, upper))
        if self._swing is not None:
            offsets = (np.arange(n + 1) - 0.5 * n) * self._swing
            return self.s0 * np.exp(self._centres[n] + offsets)
        prefix = np.concatenate(([1.0], np.cumprod(self._ups[:n])))
        suffix = np.concatenate((np.cumprod(self._downs[:n][::-1])[::-1], [1.0]))
        return self.s0 * prefix * suffix

    def levels(self) -> Iterator[np.ndarray]:
        for n in range(self.levels_count):
            yield self.level(n)

    def terminal(self) -> np.ndarray:
        return self.level(self.grid.steps)

    def node_rows(self) -> Iterator[Tuple[int, int, float]]:
        """(n, j, S) for every node, level by level."""
        for n in range(self.levels_count):
            for j, price in zip(self.indices(n), self.level(n)):
                yield n, int(j), float(price)


def _check_steps(s0: float, grid: TimeGrid, steps: Sequence[StepSpec], branches: int) -> None:
    if not s0 > 0:
        raise DomainError(f"S0 must be > 0, got {s0}")
    if len(steps) != grid.steps:
        raise ShapeError(f"Grid has {grid.steps} steps but {len(steps)} step specs were given")
    for n, step in enumerate(steps):
        if step.branches != branches:
            raise ShapeError(f"Step {n} has {step.branches} branches, expected {branches}")


def build_binomial(
    s0: float, grid: TimeGrid, steps: Sequence[StepSpec], convention: str = MOMENT_MATCHED
) -> Lattice:
    """Binomial lattice; identical factors give plain products under either convention."""
    _check_steps(s0, grid, steps, 2)
    logger.debug("Building binomial lattice: S0=%s N=%s convention=%s", s0, grid.steps, convention)
    return Lattice(s0=float(s0), grid=grid, steps=tuple(steps), kind=BINOMIAL, convention=convention)


def build_trinomial(s0: float, grid: TimeGrid, steps: Sequence[StepSpec]) -> Lattice:
    """Trinomial lattice with minimal-swing canonical node values; constant factors only."""
    _check_steps(s0, grid, steps, 3)
    if not _same_factors(steps):
        raise ShapeError("Trinomial lattices require constant coefficients (identical factors on every step)")
    logger.debug("Building trinomial lattice: S0=%s N=%s", s0, grid.steps)
    return Lattice(s0=float(s0), grid=grid, steps=tuple(steps), kind=TRINOMIAL)


def build_lattice(
    s0: float, grid: TimeGrid, steps: Sequence[StepSpec], convention: str = MOMENT_MATCHED
) -> Lattice:
    """Dispatch on the branch count of the first step."""
    if not steps:
        raise ShapeError("No step specs given")
    if steps[0].is_binomial:
        return build_binomial(s0, grid, steps, convention)
    return build_trinomial(s0, grid, steps)


def recombination_residual(steps: Sequence[StepSpec], grid: TimeGrid) -> float:
    """Size of the recombination defect that the canonical node convention hides.

    Binomial: max_k |up_k·down_{k+1} - down_k·up_{k+1}| / (up_k·down_{k+1}).
    Trinomial: max_k |up·down - mid²| / mid².
    """
    if len(steps) != grid.steps:
        raise ShapeError(f"Grid has {grid.steps} steps but {len(steps)} step specs were given")
    if not steps:
        return 0.0
    if steps[0].is_binomial:
        residual = 0.0
        for a, b in zip(steps, steps[1:]):
            up_down = a.up * b.down
            residual = max(residual, abs(up_down - a.down * b.up) / up_down)
        return residual
    return max(abs(s.up * s.down - s.mid * s.mid) / (s.mid * s.mid) for s in steps)
