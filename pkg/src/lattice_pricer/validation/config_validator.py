"""Rule-based validation of run configuration documents."""

import math
from typing import Any, Dict, List, Optional, Tuple

from ..coefficients import CoefficientCurve
from ..errors import DomainError
from ..lattice import WORLDS
from ..models import list_models
from .validation_result import ValidationResult
from .validation_rule import ValidationRule

RuleOutcome = Tuple[bool, str, Optional[str]]

COMMANDS_NEEDING_PAYOFF = {"price", "converge", "hedge"}
KNOWN_KEYS = {"spot", "payoff", "grid", "model", "world", "mu", "sigma", "rate", "p", "oracle", "keep_values"}
REQUIRED_KEYS = ("spot", "grid", "model", "mu", "sigma", "rate")
CURVE_KEYS = ("mu", "sigma", "rate", "p")


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


class RunConfigValidator:
    """Validator for RunConfig documents; rules report the offending field."""

    def __init__(self, command: str = "price"):
        self.command = command
        self.rules: List[ValidationRule] = []
        self._setup_default_rules()

    def _setup_default_rules(self) -> None:
        """Setup default validation rules."""
        self.add_rule(ValidationRule(
            name="structure_check",
            validator=self._validate_structure,
            description="Config is an object carrying every required key",
        ))
        self.add_rule(ValidationRule(
            name="unknown_keys",
            validator=self._validate_unknown_keys,
            description="Keys outside the RunConfig schema are ignored",
            severity="warning",
        ))
        self.add_rule(ValidationRule(
            name="spot",
            validator=self._validate_spot,
            description="Spot price is a positive number",
        ))
        self.add_rule(ValidationRule(
            name="grid",
            validator=self._validate_grid,
            description="Maturity > 0 and an integer step count",
        ))
        self.add_rule(ValidationRule(
            name="payoff",
            validator=self._validate_payoff,
            description="Call or put with a non-negative strike",
        ))
        self.add_rule(ValidationRule(
            name="model",
            validator=self._validate_model,
            description="Model is registered and world is known",
        ))
        self.add_rule(ValidationRule(
            name="curves",
            validator=self._validate_curves,
            description="Coefficient curves parse and cover the maturity",
        ))
        self.add_rule(ValidationRule(
            name="positivity",
            validator=self._validate_positivity,
            description="sigma(t) > 0 and r(t) > 0 on the grid",
        ))
        self.add_rule(ValidationRule(
            name="drift_assumption",
            validator=self._validate_drift_assumption,
            description="r(t) < mu(t) on the grid",
            severity="warning",
        ))

    def add_rule(self, rule: ValidationRule) -> None:
        """Add a new validation rule."""
        self.rules.append(rule)

    def remove_rule(self, rule_name: str) -> bool:
        """Remove a rule by name."""
        initial_count = len(self.rules)
        self.rules = [r for r in self.rules if r.name != rule_name]
        return len(self.rules) < initial_count

    def validate(self, obj: Any) -> Tuple[bool, List[ValidationResult]]:
        """Validate an object using all rules."""
        results = []

        for rule in self.rules:
            try:
                is_valid, message, field = rule.validator(obj)
                results.append(ValidationResult(
                    is_valid=is_valid,
                    message=message,
                    rule_name=rule.name,
                    severity=rule.severity,
                    field=field,
                ))
            except Exception as e:
                results.append(ValidationResult(
                    is_valid=False,
                    message=f"Rule execution failed: {e}",
                    rule_name=rule.name,
                    severity="error",
                    details={"exception": str(e)},
                ))
            if rule.name == "structure_check" and not results[-1].is_valid:
                break

        overall_valid = all(r.is_valid for r in results if r.severity == "error")
        return overall_valid, results

    def validate_with_summary(self, obj: Any) -> Dict:
        """Validate object and return detailed summary."""
        is_valid, results = self.validate(obj)
        errors = [r for r in results if r.severity == "error" and not r.is_valid]
        warnings = [r for r in results if r.severity == "warning" and not r.is_valid]
        return {
            "is_valid": is_valid,
            "summary": {
                "total_rules": len(results),
                "passed": len([r for r in results if r.is_valid]),
                "errors": len(errors),
                "warnings": len(warnings),
            },
            "results": results,
            "errors": errors,
            "warnings": warnings,
        }

    # Rule implementations
    def _validate_structure(self, obj: Any) -> RuleOutcome:
        if not isinstance(obj, dict):
            return False, "Config must be a JSON object", None
        required = list(REQUIRED_KEYS)
        if self.command in COMMANDS_NEEDING_PAYOFF:
            required.append("payoff")
        if obj.get("model") == "ksrf-td":
            required.append("p")
        for key in required:
            if key not in obj:
                return False, f"Missing required field '{key}'", key
        return True, "Structure is valid", None

    def _validate_unknown_keys(self, obj: Dict) -> RuleOutcome:
        extra = sorted(set(obj) - KNOWN_KEYS)
        if extra:
            return False, f"Unknown fields ignored: {extra}", extra[0]
        return True, "No unknown fields", None

    def _validate_spot(self, obj: Dict) -> RuleOutcome:
        spot = obj["spot"]
        if not _is_number(spot) or spot <= 0:
            return False, f"'spot' must be a positive number, got {spot!r}", "spot"
        return True, "Spot is valid", None

    def _validate_grid(self, obj: Dict) -> RuleOutcome:
        grid = obj["grid"]
        if not isinstance(grid, dict):
            return False, "'grid' must be an object with 'maturity' and 'steps'", "grid"
        maturity = grid.get("maturity")
        if not _is_number(maturity) or maturity <= 0:
            return False, f"'maturity' must be a positive number, got {maturity!r}", "maturity"
        steps = grid.get("steps")
        minimum = 0 if self.command == "tree" else 1
        if not isinstance(steps, int) or isinstance(steps, bool) or steps < minimum:
            return False, f"'steps' must be an integer >= {minimum}, got {steps!r}", "steps"
        return True, "Grid is valid", None

    def _validate_payoff(self, obj: Dict) -> RuleOutcome:
        if "payoff" not in obj:
            return True, "No payoff needed", None
        payoff = obj["payoff"]
        if not isinstance(payoff, dict):
            return False, "'payoff' must be an object with 'kind' and 'strike'", "payoff"
        if payoff.get("kind") not in ("call", "put"):
            return False, f"'payoff.kind' must be 'call' or 'put', got {payoff.get('kind')!r}", "payoff.kind"
        strike = payoff.get("strike")
        if not _is_number(strike) or strike < 0:
            return False, f"'strike' must be a non-negative number, got {strike!r}", "strike"
        return True, "Payoff is valid", None

    def _validate_model(self, obj: Dict) -> RuleOutcome:
        available = list_models()
        if obj["model"] not in available:
            return False, f"'model' must be one of {sorted(available)}, got {obj['model']!r}", "model"
        world = obj.get("world", "risk-neutral")
        if world not in WORLDS:
            return False, f"'world' must be one of {list(WORLDS)}, got {world!r}", "world"
        return True, "Model is valid", None

    def _parse_curves(self, obj: Dict) -> Dict[str, CoefficientCurve]:
        return {key: CoefficientCurve.from_dict(obj[key]) for key in CURVE_KEYS if key in obj}

    def _validate_curves(self, obj: Dict) -> RuleOutcome:
        maturity = obj["grid"].get("maturity") if isinstance(obj["grid"], dict) else None
        for key in CURVE_KEYS:
            if key not in obj:
                continue
            try:
                curve = CoefficientCurve.from_dict(obj[key])
            except DomainError as e:
                return False, f"'{key}': {e}", key
            if _is_number(maturity) and curve.domain_end < maturity:
                return False, f"'{key}' curve ends at t={curve.domain_end}, before maturity {maturity}", key
        return True, "Curves are valid", None

    def _grid_times(self, obj: Dict) -> List[float]:
        grid = obj["grid"]
        maturity, steps = grid["maturity"], max(grid["steps"], 1)
        return [maturity * n / steps for n in range(steps + 1)]

    def _validate_positivity(self, obj: Dict) -> RuleOutcome:
        curves = self._parse_curves(obj)
        for t in self._grid_times(obj):
            for key in ("sigma", "rate"):
                if curves[key](t) <= 0:
                    return False, f"'{key}' must be > 0 on the grid, got {curves[key](t)} at t={t}", key
            if "p" in curves and not 0.0 < curves["p"](t) < 1.0:
                return False, f"'p' must lie in (0, 1) on the grid, got {curves['p'](t)} at t={t}", "p"
        return True, "Coefficients are positive", None

    def _validate_drift_assumption(self, obj: Dict) -> RuleOutcome:
        curves = self._parse_curves(obj)
        for t in self._grid_times(obj):
            if curves["rate"](t) >= curves["mu"](t):
                return False, f"r(t) >= mu(t) at t={t}; pricing stays defined", "rate"
        return True, "Drift assumption holds", None


def validate_run_config(obj: object, command: str = "price") -> Tuple[bool, str, Optional[str]]:
    """First error message and field, or (True, '', None)."""
    validator = RunConfigValidator(command)
    is_valid, results = validator.validate(obj)
    if is_valid:
        return True, "", None
    for result in results:
        if not result.is_valid and result.severity == "error":
            return False, result.message, result.field
    return False, "Validation failed", None
