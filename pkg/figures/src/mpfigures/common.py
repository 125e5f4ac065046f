"""Shared plumbing for the figure scripts.

The scripts are read-only consumers of the upstream CSV/JSON files: they
validate schemas and render, but never recompute mathematical quantities.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # deterministic, headless

EXIT_OK = 0
EXIT_USAGE = 2

DPI = 150
PNG_METADATA = {"Software": "mpfigures"}


class SchemaError(ValueError):
    """Input file is missing, empty, or has the wrong columns."""


@dataclass(frozen=True)
class FigureSpec:
    kind: str                      # nodes-curve | growth | surface
    inputs: list
    out: str
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("nodes-curve", "growth", "surface"):
            raise SchemaError(f"unknown figure kind {self.kind!r}")
        for path in self.inputs:
            if not Path(path).is_file():
                raise SchemaError(f"input file not found: {path}")


def read_csv_columns(path, required):
    """Load a CSV with at least the required columns; returns column dict."""
    with open(path, newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise SchemaError(f"{path}: empty file (schema: {','.join(required)})")
        missing = [c for c in required if c not in reader.fieldnames]
        if missing:
            raise SchemaError(
                f"{path}: missing columns {missing} (schema: {','.join(required)})"
            )
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{path}: no data rows (schema: {','.join(required)})")
    return {c: [float(r[c]) for r in rows] for c in required}


def save(fig, out: str) -> None:
    fig.savefig(out, dpi=DPI, metadata=PNG_METADATA)
