"""Delimited and JSON rendering with study-table number formatting.

Probability columns mirror the study table's conventions: four decimals
down to the scientific threshold, below that scientific notation with
three significant digits. The same formatted value feeds every output
kind, so CSV, TSV, and JSON parse back to identical numbers.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

KINDS = ("csv", "tsv", "json")


@dataclass(frozen=True)
class OutputFormat:
    kind: str = "csv"
    precision: int = 4
    sci_threshold: float = 1e-3

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown output kind {self.kind!r}; expected one of {KINDS}")
        if self.precision < 1:
            raise ValueError(f"precision must be at least 1, got {self.precision}")


def format_probability(value: float, fmt: OutputFormat = OutputFormat()) -> str:
    """Probability cell: fixed decimals, or 3-significant-digit scientific
    below the format's threshold."""
    if value != 0.0 and abs(value) < fmt.sci_threshold:
        return f"{value:.2E}"
    return f"{value:.{fmt.precision}f}"


def format_number(value: float) -> str:
    """General numeric cell with six significant digits."""
    return f"{value:.6g}"


def render_rows(rows: list[dict], fmt: OutputFormat) -> str:
    """Render pre-formatted rows (all sharing one key order) as fmt.kind.

    Cells are ints or already-formatted strings; JSON output re-parses
    numeric strings so the emitted numbers equal what CSV readers see.
    """
    if fmt.kind == "json":
        return json.dumps([{k: _json_value(v) for k, v in row.items()} for row in rows], indent=2) + "\n"
    delimiter = "," if fmt.kind == "csv" else "\t"
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=delimiter, lineterminator="\n")
    if rows:
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow(row.values())
    return buffer.getvalue()


def _json_value(cell):
    if isinstance(cell, (int, float)):
        return cell
    try:
        return int(cell)
    except ValueError:
        try:
            return float(cell)
        except ValueError:
            return cell
