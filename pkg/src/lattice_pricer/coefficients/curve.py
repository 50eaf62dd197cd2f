"""Deterministic coefficient curves: constant, linear and piecewise-linear in time."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterator, Sequence, Tuple

import numpy as np

from ..errors import DomainError

CURVE_KINDS = ("constant", "linear", "piecewise")


@dataclass(frozen=True)
class CoefficientCurve:
    """A time-dependent scalar such as mu(t), sigma(t), r(t) or the KSRF p(t).

    Only piecewise-linear families are supported so every integral, including the
    integral of the squared curve, has a closed form.
    """

    kind: str
    value: float = 0.0
    a: float = 0.0
    b: float = 0.0
    knots: Tuple[Tuple[float, float], ...] = ()

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise DomainError(f"Unknown curve kind '{self.kind}'. Available: {', '.join(CURVE_KINDS)}")
        if self.kind == "piecewise":
            if len(self.knots) < 2:
                raise DomainError("Piecewise curve needs at least two knots")
            times = [t for t, _ in self.knots]
            if times[0] != 0.0:
                raise DomainError(f"First knot must sit at t=0, got t={times[0]}")
            if any(t1 <= t0 for t0, t1 in zip(times, times[1:])):
                raise DomainError("Knot times must be strictly increasing")
        for number in (self.value, self.a, self.b, *(v for knot in self.knots for v in knot)):
            if not math.isfinite(number):
                raise DomainError("Curve parameters must be finite")

    # Constructors
    @classmethod
    def constant(cls, value: float) -> "CoefficientCurve":
        return cls(kind="constant", value=float(value))

    @classmethod
    def linear(cls, a: float, b: float) -> "CoefficientCurve":
        return cls(kind="linear", a=float(a), b=float(b))

    @classmethod
    def piecewise(cls, knots: Sequence[Sequence[float]]) -> "CoefficientCurve":
        return cls(kind="piecewise", knots=tuple((float(t), float(v)) for t, v in knots))

    @classmethod
    def from_dict(cls, data: Dict) -> "CoefficientCurve":
        """Build a curve from its JSON encoding."""
        if not isinstance(data, dict) or "kind" not in data:
            raise DomainError("Curve must be an object with a 'kind' key")
        kind = data["kind"]
        try:
            if kind == "constant":
                return cls.constant(data["value"])
            if kind == "linear":
                return cls.linear(data["a"], data["b"])
            if kind == "piecewise":
                return cls.piecewise(data["knots"])
        except (KeyError, TypeError) as e:
            raise DomainError(f"Malformed {kind} curve: {e}") from e
        raise DomainError(f"Unknown curve kind '{kind}'. Available: {', '.join(CURVE_KINDS)}")

    def to_dict(self) -> Dict:
        if self.kind == "constant":
            return {"kind": "constant", "value": self.value}
        if self.kind == "linear":
            return {"kind": "linear", "a": self.a, "b": self.b}
        return {"kind": "piecewise", "knots": [list(knot) for knot in self.knots]}

    # Domain
    @property
    def domain_end(self) -> float:
        if self.kind == "piecewise":
            return self.knots[-1][0]
        return math.inf

    @property
    def is_constant(self) -> bool:
        if self.kind == "constant":
            return True
        if self.kind == "linear":
            return self.b == 0.0
        return len({v for _, v in self.knots}) == 1

    def check_domain(self, t: float) -> None:
        if not (0.0 <= t <= self.domain_end) or math.isnan(t):
            raise DomainError(f"t={t} outside curve domain [0, {self.domain_end}]")

    def __call__(self, t: float) -> float:
        return evaluate(self, t)

    def _breakpoints(self, t0: float, t1: float) -> Iterator[float]:
        yield t0
        if self.kind == "piecewise":
            for t, _ in self.knots:
                if t0 < t < t1:
                    yield t
        yield t1


def evaluate(curve: CoefficientCurve, t: float) -> float:
    """Value of the curve at time t."""
    curve.check_domain(t)
    if curve.kind == "constant":
        return curve.value
    if curve.kind == "linear":
        return curve.a + curve.b * t
    times = np.fromiter((k[0] for k in curve.knots), dtype=float)
    values = np.fromiter((k[1] for k in curve.knots), dtype=float)
    return float(np.interp(t, times, values))


def integrate(curve: CoefficientCurve, t0: float, t1: float, squared: bool = False) -> float:
    """Exact integral of the curve (or of its square) over [t0, t1].

    On each linear piece ∫v = h(v0+v1)/2 and ∫v² = h(v0² + v0·v1 + v1²)/3.
    """
    if t1 < t0:
        raise DomainError(f"Integration bounds reversed: [{t0}, {t1}]")
    curve.check_domain(t0)
    curve.check_domain(t1)
    if t0 == t1:
        return 0.0
    if curve.kind == "constant" and not squared:
        return curve.value * (t1 - t0)

    points = list(curve._breakpoints(t0, t1))
    total = 0.0
    for x, y in zip(points, points[1:]):
        vx, vy, h = evaluate(curve, x), evaluate(curve, y), y - x
        if squared:
            total += h * (vx * vx + vx * vy + vy * vy) / 3.0
        else:
            total += h * (vx + vy) / 2.0
    return total


def mean_value(curve: CoefficientCurve, horizon: float, squared: bool = False) -> float:
    """Time average (1/T)∫_0^T of the curve or its square."""
    if horizon <= 0:
        raise DomainError(f"Averaging horizon must be > 0, got {horizon}")
    if curve.kind == "constant":
        return curve.value * curve.value if squared else curve.value
    return integrate(curve, 0.0, horizon, squared=squared) / horizon
