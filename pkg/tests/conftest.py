import json

import pytest

from lattice_pricer.coefficients import CoefficientCurve, MarketCoefficients


def make_market(mu=0.1, sigma=0.2, rate=0.05) -> MarketCoefficients:
    """Market from numbers or curves."""

    def curve(value):
        return value if isinstance(value, CoefficientCurve) else CoefficientCurve.constant(value)

    return MarketCoefficients(mu=curve(mu), sigma=curve(sigma), rate=curve(rate))


@pytest.fixture
def standard_market() -> MarketCoefficients:
    return make_market()


@pytest.fixture
def time_dependent_market() -> MarketCoefficients:
    return make_market(
        mu=0.1,
        sigma=CoefficientCurve.linear(0.15, 0.1),
        rate=CoefficientCurve.linear(0.03, 0.02),
    )


@pytest.fixture
def write_config(tmp_path):
    """Write a RunConfig JSON document and return its path."""

    def _write(overrides=None, name="run.json"):
        data = {
            "spot": 100.0,
            "payoff": {"kind": "call", "strike": 100.0},
            "grid": {"maturity": 1.0, "steps": 100},
            "model": "crr-td",
            "mu": {"kind": "constant", "value": 0.1},
            "sigma": {"kind": "constant", "value": 0.2},
            "rate": {"kind": "constant", "value": 0.05},
        }
        data.update(overrides or {})
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write
