"""Terminal payoff functions g(S(T))."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..errors import DomainError

PAYOFF_KINDS = ("call", "put", "custom")


@dataclass(frozen=True)
class Payoff:
    """European payoff: call max(S-K, 0), put max(K-S, 0), or a custom g(S)."""

    kind: str
    strike: float = 0.0
    func: Optional[Callable] = None

    def __post_init__(self):
        if self.kind not in PAYOFF_KINDS:
            raise DomainError(f"Unknown payoff kind '{self.kind}'. Available: {', '.join(PAYOFF_KINDS)}")
        if self.kind == "custom" and self.func is None:
            raise DomainError("Custom payoff needs a function g(S)")
        if self.kind != "custom" and not self.strike >= 0:
            raise DomainError(f"Strike must be >= 0, got {self.strike}")

    @classmethod
    def call(cls, strike: float) -> "Payoff":
        return cls("call", float(strike))

    @classmethod
    def put(cls, strike: float) -> "Payoff":
        return cls("put", float(strike))

    @classmethod
    def custom(cls, func: Callable) -> "Payoff":
        return cls("custom", func=func)

    @classmethod
    def constant(cls, value: float) -> "Payoff":
        return cls.custom(lambda s: np.full_like(np.asarray(s, dtype=float), value))

    def __call__(self, prices) -> np.ndarray:
        prices = np.asarray(prices, dtype=float)
        if self.kind == "call":
            values = np.maximum(prices - self.strike, 0.0)
        elif self.kind == "put":
            values = np.maximum(self.strike - prices, 0.0)
        else:
            values = np.asarray(self.func(prices), dtype=float)
            if values.shape != prices.shape:
                values = np.vectorize(self.func, otypes=[float])(prices)
        if not np.all(np.isfinite(values)):
            raise DomainError("Payoff produced non-finite values on the terminal nodes")
        return values
