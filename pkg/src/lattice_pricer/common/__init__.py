"""Common utilities for lattice_pricer."""

from .helpers import Stopwatch, format_duration, format_sweep_progress, parse_float_list, parse_int_list
from .report_writer import ReportWriter

__all__ = [
    "Stopwatch",
    "format_duration",
    "format_sweep_progress",
    "parse_float_list",
    "parse_int_list",
    "ReportWriter",
]
