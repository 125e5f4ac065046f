"""Log-scale growth plot of the Lebesgue constant with its reference curves.

Consumes the CSV written by ``mpinterp growth``; the three overlays
(lower fit, upper fit, measured corner value, the last tracking
(n+1)(n+2)/2) are taken from the file, never recomputed.
"""

from __future__ import annotations

import argparse
import sys

import matplotlib.pyplot as plt

from .common import EXIT_OK, EXIT_USAGE, FigureSpec, SchemaError, read_csv_columns, save

GROWTH_COLUMNS = ["n", "lambda", "corner", "fit_lower", "fit_upper"]


def plot_growth(spec: FigureSpec):
    data = read_csv_columns(spec.inputs[0], GROWTH_COLUMNS)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    ax.plot(data["n"], data["lambda"], "o-", color="black", ms=4,
            label="Lebesgue constant")
    ax.plot(data["n"], data["fit_lower"], "--", color="tab:green",
            label="(0.7n+1)^2")
    ax.plot(data["n"], data["fit_upper"], "--", color="tab:orange",
            label="(0.75n+1)^2")
    ax.plot(data["n"], data["corner"], ":", color="tab:blue",
            label="corner value ~ (n+1)(n+2)/2")
    if not spec.options.get("linear", False):
        ax.set_yscale("log")
    ax.set_xlabel("degree n")
    ax.set_ylabel("constant")
    ax.set_title(spec.options.get("title", "Lebesgue constant growth"))
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    return fig


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="growth plot with reference curves")
    parser.add_argument("--input", required=True, help="growth CSV")
    parser.add_argument("--out", required=True)
    parser.add_argument("--title", default=None)
    parser.add_argument("--linear", action="store_true",
                        help="linear y axis instead of the default log scale")
    args = parser.parse_args(argv)
    options = {"linear": args.linear}
    if args.title:
        options["title"] = args.title
    try:
        spec = FigureSpec("growth", [args.input], args.out, options)
        fig = plot_growth(spec)
        save(fig, spec.out)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
