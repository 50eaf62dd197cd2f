"""Small helpers shared by the command handlers."""

import time
from typing import List, Optional, Sequence, Tuple

from ..errors import ConfigValidationError


def format_duration(seconds: float) -> str:
    """Wall time of a pricing run: µs and ms below a second, then seconds, then minutes."""
    if seconds < 1e-3:
        return f"{seconds * 1e6:.0f}µs"
    if seconds < 1:
        return f"{seconds * 1e3:.1f}ms"
    if seconds < 60:
        return f"{seconds:.2f}s"
    minutes, secs = divmod(int(round(seconds)), 60)
    return f"{minutes}m {secs:02d}s"


def format_sweep_progress(index: int, total: int, model: str, steps: Sequence[int]) -> str:
    """Progress line for one model of a convergence sweep, e.g. '[2/3] tri-new: N=100..800 (4 runs)'."""
    if len(steps) == 1:
        span = f"N={steps[0]}"
    else:
        span = f"N={steps[0]}..{steps[-1]} ({len(steps)} runs)"
    return f"[{index}/{total}] {model}: {span}"


def parse_float_list(raw: Optional[str], default: Tuple[float, ...], field: str) -> List[float]:
    """Parse a comma-separated list of floats such as '0.5,1,2'."""
    if raw is None:
        return list(default)
    try:
        return [float(item) for item in raw.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigValidationError(f"'{field}' must be a comma-separated list of numbers: {e}", field=field) from e


def parse_int_list(raw: Optional[str], default: Tuple[int, ...], field: str) -> List[int]:
    """Parse a comma-separated list of positive integers such as '100,200,400'."""
    if raw is None:
        values = list(default)
    else:
        try:
            values = [int(item) for item in raw.split(",") if item.strip()]
        except ValueError as e:
            raise ConfigValidationError(f"'{field}' must be a comma-separated list of integers: {e}", field=field) from e
    if not values or any(v < 1 for v in values):
        raise ConfigValidationError(f"'{field}' must list integers >= 1, got {values}", field=field)
    return values


class Stopwatch:
    """Elapsed wall time since construction."""

    def __init__(self):
        self.started = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def formatted(self) -> str:
        return format_duration(self.elapsed)
