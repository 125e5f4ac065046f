"""Overlay plot of two node families on their generating Lissajous curve.

Inputs, in order: the node CSV of the interior family, the node CSV of the
full curve family, and a dense curve-sample CSV (all produced by
``mpinterp nodes``).
"""

from __future__ import annotations

import argparse
import sys

import matplotlib.pyplot as plt

from .common import EXIT_OK, EXIT_USAGE, FigureSpec, SchemaError, read_csv_columns, save


def plot_nodes_curve(spec: FigureSpec):
    """Render the overlay; returns the matplotlib figure."""
    interior_path, full_path, curve_path = spec.inputs
    interior = read_csv_columns(interior_path, ["x", "y"])
    full = read_csv_columns(full_path, ["x", "y"])
    curve = read_csv_columns(curve_path, ["x", "y"])

    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    ax.plot(curve["x"], curve["y"], color="0.75", lw=0.8, zorder=1, label="curve")
    ax.plot(full["x"], full["y"], "o", ms=5, mfc="none", mec="tab:blue",
            lw=0, zorder=2, label=f"full family ({len(full['x'])})")
    ax.plot(interior["x"], interior["y"], "s", ms=4, color="tab:red",
            lw=0, zorder=3, label=f"interior family ({len(interior['x'])})")
    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.05)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(spec.options.get("title", "Node families on the generating curve"))
    ax.legend(loc="upper right", fontsize=8, framealpha=0.9)
    fig.tight_layout()
    return fig


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="overlay interior nodes, curve-family nodes and the curve"
    )
    parser.add_argument("--input", nargs=3, required=True,
                        metavar=("INTERIOR", "FULL", "CURVE"),
                        help="three CSVs: interior nodes, full family, curve samples")
    parser.add_argument("--out", required=True)
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)
    options = {"title": args.title} if args.title else {}
    try:
        spec = FigureSpec("nodes-curve", list(args.input), args.out, options)
        fig = plot_nodes_curve(spec)
        save(fig, spec.out)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
