"""Render result rows as an aligned table, CSV or JSON."""

import csv
import io
import json
import math
from typing import Any, Dict, List, Sequence

from ..config import OUTPUT_FORMATS, SIGNIFICANT_DIGITS
from ..errors import ConfigValidationError


class ReportWriter:
    """Formats rows of named columns; tables use fixed significant digits, machine formats full precision."""

    def __init__(self, output_format: str = "table", digits: int = SIGNIFICANT_DIGITS):
        if output_format not in OUTPUT_FORMATS:
            raise ConfigValidationError(
                f"'format' must be one of {list(OUTPUT_FORMATS)}, got {output_format!r}", field="format"
            )
        self.output_format = output_format
        self.digits = digits

    def render(self, columns: Sequence[str], rows: Sequence[Dict[str, Any]]) -> str:
        if self.output_format == "json":
            return json.dumps([{c: self._machine(row.get(c)) for c in columns} for row in rows], indent=2)
        if self.output_format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([self._csv_cell(row.get(c)) for c in columns])
            return buffer.getvalue().rstrip("\n")
        return self._table(columns, rows)

    def render_record(self, record: Dict[str, Any]) -> str:
        """A single result object; tables print one 'key: value' line per field."""
        if self.output_format == "table":
            width = max(len(k) for k in record)
            return "\n".join(f"{k.ljust(width)} : {self._human(v)}" for k, v in record.items())
        return self.render(list(record.keys()), [record])

    def _table(self, columns: Sequence[str], rows: Sequence[Dict[str, Any]]) -> str:
        cells: List[List[str]] = [[self._human(row.get(c)) for c in columns] for row in rows]
        widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
        lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
        lines.append("  ".join("-" * w for w in widths))
        lines.extend("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in cells)
        return "\n".join(lines)

    def _human(self, value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return str(value).lower()
        if isinstance(value, float):
            return format(value, f".{self.digits}g")
        return str(value)

    @staticmethod
    def _csv_cell(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return str(value).lower()
        return repr(value) if isinstance(value, float) else str(value)

    @staticmethod
    def _machine(value: Any) -> Any:
        if isinstance(value, float) and not math.isfinite(value):
            return None
        return value
