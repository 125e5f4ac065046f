"""Heatmap of the Lebesgue function over the square.

Consumes the per-point CSV written by ``mpinterp lebesgue`` (a tensor grid
flattened row-major in x, then y).
"""

from __future__ import annotations

import argparse
import sys

import matplotlib.pyplot as plt
import numpy as np

from .common import EXIT_OK, EXIT_USAGE, FigureSpec, SchemaError, read_csv_columns, save


def pivot_grid(data):
    """Reassemble the flattened tensor grid; returns (xs, ys, matrix)."""
    x = np.asarray(data["x"])
    y = np.asarray(data["y"])
    lam = np.asarray(data["lambda"])
    xs = np.unique(x)
    ys = np.unique(y)
    if len(xs) * len(ys) != len(lam):
        raise SchemaError(
            f"rows ({len(lam)}) do not form a {len(xs)}x{len(ys)} tensor grid"
        )
    order = np.lexsort((y, x))
    return xs, ys, lam[order].reshape(len(xs), len(ys))


def plot_surface(spec: FigureSpec):
    data = read_csv_columns(spec.inputs[0], ["x", "y", "lambda"])
    xs, ys, lam = pivot_grid(data)
    fig, ax = plt.subplots(figsize=(6.4, 5.2))
    mesh = ax.pcolormesh(xs, ys, lam.T, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="Lebesgue function")
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(spec.options.get("title", "Lebesgue function"))
    fig.tight_layout()
    return fig


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Lebesgue-function heatmap")
    parser.add_argument("--input", required=True, help="per-point lambda CSV")
    parser.add_argument("--out", required=True)
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)
    options = {"title": args.title} if args.title else {}
    try:
        spec = FigureSpec("surface", [args.input], args.out, options)
        fig = plot_surface(spec)
        save(fig, spec.out)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
