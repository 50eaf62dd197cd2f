import copy

import pytest

from lattice_pricer.validation import RunConfigValidator, ValidationRule, validate_run_config

BASE_CONFIG = {
    "spot": 100.0,
    "payoff": {"kind": "call", "strike": 100.0},
    "grid": {"maturity": 1.0, "steps": 100},
    "model": "crr-td",
    "mu": {"kind": "constant", "value": 0.1},
    "sigma": {"kind": "constant", "value": 0.2},
    "rate": {"kind": "constant", "value": 0.05},
}


def config(**overrides):
    data = copy.deepcopy(BASE_CONFIG)
    data.update(overrides)
    return data


def without(key):
    data = copy.deepcopy(BASE_CONFIG)
    del data[key]
    return data


def test_valid_config():
    assert validate_run_config(config()) == (True, "", None)


@pytest.mark.parametrize(
    "data, field",
    [
        (without("spot"), "spot"),
        (without("sigma"), "sigma"),
        (without("payoff"), "payoff"),
        (config(spot=-5.0), "spot"),
        (config(spot=True), "spot"),
        (config(grid={"maturity": 0.0, "steps": 10}), "maturity"),
        (config(grid={"maturity": 1.0, "steps": 0}), "steps"),
        (config(grid={"maturity": 1.0, "steps": 2.5}), "steps"),
        (config(payoff={"kind": "digital", "strike": 100.0}), "payoff.kind"),
        (config(payoff={"kind": "put", "strike": -1.0}), "strike"),
        (config(model="heston"), "model"),
        (config(world="physical"), "world"),
        (config(model="ksrf-td"), "p"),
        (config(model="ksrf-td", p={"kind": "constant", "value": 1.2}), "p"),
        (config(sigma={"kind": "constant", "value": -0.1}), "sigma"),
        (config(rate={"kind": "linear", "a": 0.05, "b": -0.1}), "rate"),
        (config(sigma={"kind": "cubic"}), "sigma"),
        (config(sigma={"kind": "piecewise", "knots": [[0.0, 0.2], [0.5, 0.2]]}), "sigma"),
    ],
)
def test_invalid_configs_report_the_field(data, field):
    is_valid, message, reported = validate_run_config(data)
    assert not is_valid
    assert message
    assert reported == field


def test_non_object_config():
    assert validate_run_config([1, 2, 3]) == (False, "Config must be a JSON object", None)


def test_moments_command_needs_no_payoff():
    assert validate_run_config(without("payoff"), command="moments")[0]


def test_tree_command_accepts_zero_steps():
    assert validate_run_config(config(grid={"maturity": 1.0, "steps": 0}), command="tree")[0]


def test_warnings_do_not_invalidate():
    validator = RunConfigValidator()
    summary = validator.validate_with_summary(config(comment="test run", rate={"kind": "constant", "value": 0.2}))
    assert summary["is_valid"]
    assert {w.rule_name for w in summary["warnings"]} == {"unknown_keys", "drift_assumption"}
    assert summary["summary"]["errors"] == 0
    assert summary["summary"]["warnings"] == 2


def test_structure_failure_stops_validation():
    is_valid, results = RunConfigValidator().validate({"spot": 100.0})
    assert not is_valid
    assert [r.rule_name for r in results] == ["structure_check"]
    assert results[0].field == "grid"


def test_custom_rules_can_be_added_and_removed():
    validator = RunConfigValidator()
    validator.add_rule(ValidationRule(
        name="short_maturity",
        validator=lambda obj: (obj["grid"]["maturity"] <= 5, "Maturity above five years", "maturity"),
        description="Maturity at most five years",
    ))
    is_valid, _ = validator.validate(config(grid={"maturity": 10.0, "steps": 100}))
    assert not is_valid

    assert validator.remove_rule("short_maturity")
    assert not validator.remove_rule("short_maturity")
    assert validator.validate(config(grid={"maturity": 10.0, "steps": 100}))[0]


def test_failing_rule_is_reported_not_raised():
    validator = RunConfigValidator()
    validator.add_rule(ValidationRule(name="broken", validator=lambda obj: obj["missing"], description="Broken"))
    is_valid, results = validator.validate(config())
    assert not is_valid
    assert results[-1].message.startswith("Rule execution failed")
