"""RunConfig: the JSON document driving every command."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Dict, Optional

from ..coefficients import CoefficientCurve, MarketCoefficients
from ..errors import ConfigValidationError
from ..lattice import TimeGrid
from ..models import LatticeModel, get_model
from ..pricing import Payoff
from ..validation import RunConfigValidator

logger = logging.getLogger(__name__)

MODEL_REPORTED_RULES = ("drift_assumption",)


@dataclass(frozen=True)
class PayoffConfig:
    kind: str
    strike: float

    def to_payoff(self) -> Payoff:
        return Payoff.call(self.strike) if self.kind == "call" else Payoff.put(self.strike)


@dataclass(frozen=True)
class GridConfig:
    maturity: float
    steps: int

    def to_grid(self, steps: Optional[int] = None) -> TimeGrid:
        return TimeGrid(self.maturity, self.steps if steps is None else steps)


@dataclass(frozen=True)
class RunConfig:
    spot: float
    grid: GridConfig
    model: str
    mu: CoefficientCurve
    sigma: CoefficientCurve
    rate: CoefficientCurve
    world: str = "risk-neutral"
    p: Optional[CoefficientCurve] = None
    payoff: Optional[PayoffConfig] = None
    oracle: bool = True
    keep_values: bool = False

    @property
    def market(self) -> MarketCoefficients:
        return MarketCoefficients(mu=self.mu, sigma=self.sigma, rate=self.rate)

    def build_model(self, name: Optional[str] = None) -> LatticeModel:
        return get_model(name or self.model, self.market, self.p)

    def with_world(self, world: str) -> "RunConfig":
        return replace(self, world=world)


def parse_run_config(data: Dict, command: str = "price") -> RunConfig:
    """Validate a decoded config document and build the RunConfig."""
    validator = RunConfigValidator(command)
    is_valid, results = validator.validate(data)
    for result in results:
        if result.severity == "warning" and not result.is_valid:
            # the model logs the drift warning itself when it meets the grid
            if result.rule_name in MODEL_REPORTED_RULES:
                logger.info("%s", result.message)
            else:
                logger.warning("⚠️  %s", result.message)
    if not is_valid:
        first = next(r for r in results if r.severity == "error" and not r.is_valid)
        raise ConfigValidationError(first.message, field=first.field, results=results)

    payoff = data.get("payoff")
    return RunConfig(
        spot=float(data["spot"]),
        grid=GridConfig(maturity=float(data["grid"]["maturity"]), steps=int(data["grid"]["steps"])),
        model=data["model"],
        mu=CoefficientCurve.from_dict(data["mu"]),
        sigma=CoefficientCurve.from_dict(data["sigma"]),
        rate=CoefficientCurve.from_dict(data["rate"]),
        world=data.get("world", "risk-neutral"),
        p=CoefficientCurve.from_dict(data["p"]) if "p" in data else None,
        payoff=PayoffConfig(payoff["kind"], float(payoff["strike"])) if payoff else None,
        oracle=bool(data.get("oracle", True)),
        keep_values=bool(data.get("keep_values", False)),
    )


def load_run_config(path, command: str = "price") -> RunConfig:
    """Read, validate and parse a JSON config file."""
    path = Path(path)
    if not path.exists():
        raise ConfigValidationError(f"Config file {path} not found", field="config")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigValidationError(f"Config file {path} is not valid JSON: {e}", field="config") from e
    return parse_run_config(data, command)
