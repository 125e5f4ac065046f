"""Batch command-line front end.

Subcommands: nodes | lebesgue | growth | cubature-check | mesh-certify.
Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 mathematical
invariant failure.  Identical invocations are byte-reproducible (growth
requires --no-timing for that, since its seconds column is wall clock).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .cubature import exactness_table
from .errors import InvalidDegreeError, ParameterError
from .interp import (
    GridSpec,
    KernelEvalConfig,
    KernelMethod,
    lebesgue_constant,
    lebesgue_grid_eval,
)
from .meshes import certified_sup_norm, fine_grid_norm, random_polynomial
from .nodes import (
    extended_mp,
    lissajous_samples,
    morrow_patterson,
    padua,
)
from .serialize import fmt, nodeset_to_csv, nodeset_to_json, xy_table_to_csv

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_MATH = 3

EXACTNESS_GATE = 1e-11


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _config(args) -> KernelEvalConfig:
    return KernelEvalConfig(method=KernelMethod(args.method))


def cmd_nodes(args) -> int:
    family = args.family
    n = args.n
    if family == "mp":
        ns, mask = morrow_patterson(n), None
    elif family == "emp":
        ns, mask = extended_mp(n), None
    elif family == "padua":
        ns, mask = padua(n), None
    elif family in ("mesh-a", "mesh-b"):
        from .meshes import mesh_a, mesh_b
        from .nodes import NodeFamily, NodeSet

        mesh = mesh_a(n) if family == "mesh-a" else mesh_b(n)
        ns = NodeSet(
            family=NodeFamily(family),
            degree=n,
            points=mesh.all_points(),
            angles=mesh.all_angles(),
        )
        mask = mesh.extras_mask()
    elif family == "lissajous":
        samples = lissajous_samples(n, args.samples)
        _write(args.out, xy_table_to_csv(samples))
        return EXIT_OK
    else:  # pragma: no cover - argparse restricts choices
        raise ParameterError(f"unknown family {family!r}")
    text = nodeset_to_json(ns, mask) if args.format == "json" else nodeset_to_csv(ns, mask)
    _write(args.out, text)
    return EXIT_OK


def cmd_lebesgue(args) -> int:
    spec = GridSpec(kind=args.grid, per_side=args.m)
    cfg = _config(args)
    xs, ys, lam, fallbacks = lebesgue_grid_eval(args.n, spec, cfg, family=args.family)
    lines = ["x,y,lambda"]
    for a, x in enumerate(xs):
        for b, y in enumerate(ys):
            lines.append(f"{fmt(x)},{fmt(y)},{fmt(lam[a, b])}")
    _write(args.out, "\n".join(lines) + "\n")

    report = lebesgue_constant(args.n, spec, cfg, family=args.family)
    payload = {
        "n": args.n,
        "mesh": {"kind": args.grid, "m": spec.side_count(args.n)},
        "constant": report.constant_estimate,
        "argmax": [report.argmax.x, report.argmax.y],
        "corner_value": report.corner_value,
        "fit_lower": report.fit_lower,
        "fit_upper": report.fit_upper,
        "cubic_bound": report.cubic_bound,
        "fast_fallback_count": report.fast_fallback_count,
        "family": args.family,
    }
    _write(args.out + ".report.json", json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def cmd_growth(args) -> int:
    if args.n_min > args.n_max:
        raise ParameterError(f"empty degree range [{args.n_min}, {args.n_max}]")
    if args.n_min % 2 or args.n_max % 2 or args.step % 2 or args.step <= 0:
        raise InvalidDegreeError("n-min, n-max and step must all be positive even")
    cfg = _config(args)
    rows = []
    deviations = []
    warnings = []
    for n in range(args.n_min, args.n_max + 1, args.step):
        spec = GridSpec(kind=args.grid, per_side=args.m)
        t0 = time.perf_counter()
        report = lebesgue_constant(n, spec, cfg, family=args.family)
        seconds = time.perf_counter() - t0 if args.timing else 0.0
        lam = report.constant_estimate
        deviations.append(abs(lam - report.corner_value) / lam)
        if not report.fit_lower <= lam <= report.fit_upper:
            warnings.append(f"n={n}: lambda={lam:.6g} outside "
                            f"[{report.fit_lower:.6g}, {report.fit_upper:.6g}]")
        if lam > report.cubic_bound:
            warnings.append(f"n={n}: lambda={lam:.6g} exceeds cubic bound")
        rows.append(
            f"{n},{fmt(lam)},{fmt(report.corner_value)},{fmt(report.fit_lower)},"
            f"{fmt(report.fit_upper)},{fmt(report.cubic_bound)},"
            f"{report.mesh_size},{fmt(seconds)}"
        )
    header = "n,lambda,corner,fit_lower,fit_upper,cubic_bound,mesh_size,seconds"
    _write(args.out, header + "\n" + "\n".join(rows) + "\n")
    print(f"growth: {len(rows)} degrees, max relative deviation of lambda "
          f"from corner value = {max(deviations):.6g}")
    for w in warnings:
        print("warning:", w)
    return EXIT_OK


def cmd_cubature_check(args) -> int:
    max_deg = 2 * args.n + 6 if args.extended else 2 * args.n
    rows = exactness_table(args.n, max_deg)
    lines = ["i,j,value,abs_error"]
    worst = 0.0
    for i, j, val, err in rows:
        lines.append(f"{i},{j},{fmt(val)},{fmt(err)}")
        if i + j <= 2 * args.n:
            worst = max(worst, err)
    _write(args.out, "\n".join(lines) + "\n")
    print(f"cubature-check: n={args.n}, max |error| over exactness range = {worst:.3e}")
    if worst >= EXACTNESS_GATE:
        print(f"cubature-check: FAILED gate {EXACTNESS_GATE:g}", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


def cmd_mesh_certify(args) -> int:
    rng = np.random.default_rng(args.seed)
    lines = ["trial,mesh_bound,fine_grid_norm,ratio"]
    violations = 0
    for trial in range(args.trials):
        poly = random_polynomial(args.n, rng)
        bound, mesh = certified_sup_norm(poly, args.n, args.mu, args.variant)
        fine = fine_grid_norm(poly)
        mesh_max = bound / mesh.certified_factor
        lines.append(f"{trial},{fmt(bound)},{fmt(fine)},{fmt(fine / mesh_max)}")
        if fine > bound:
            violations += 1
    _write(args.out, "\n".join(lines) + "\n")
    print(f"mesh-certify: n={args.n}, mu={args.mu}, variant={args.variant}, "
          f"{violations} violations in {args.trials} trials")
    return EXIT_OK if violations == 0 else EXIT_MATH


def _even_int(text: str) -> int:
    val = int(text)
    if val % 2 != 0:
        raise argparse.ArgumentTypeError(f"{val} is not even")
    return val


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpinterp",
        description="Morrow-Patterson nodes, cubature and Lebesgue-constant tools",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", required=True, help="output file path")
        p.add_argument("--seed", type=int, default=42, help="RNG seed for randomized commands")
        p.add_argument("--threads", type=int, default=0,
                       help="worker threads, 0 = auto (runs single-process today)")

    p = sub.add_parser("nodes", help="emit a node family as CSV or JSON")
    p.add_argument("--family", required=True,
                   choices=["mp", "padua", "emp", "mesh-a", "mesh-b", "lissajous"])
    p.add_argument("--n", type=int, required=True, help="degree (or nu for meshes)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--samples", type=int, default=1000,
                   help="sample count for the lissajous family")
    common(p)
    p.set_defaults(func=cmd_nodes)

    p = sub.add_parser("lebesgue", help="evaluate the Lebesgue function on a grid")
    p.add_argument("--n", type=_even_int, required=True)
    p.add_argument("--grid", choices=["cl", "equi"], default="cl")
    p.add_argument("--m", type=int, default=None, help="points per side (default max(101, 4n+1))")
    p.add_argument("--method", choices=["direct", "fast", "auto"], default="auto")
    p.add_argument("--family", choices=["mp", "emp"], default="mp")
    common(p)
    p.set_defaults(func=cmd_lebesgue)

    p = sub.add_parser("growth", help="Lebesgue constant over a degree range")
    p.add_argument("--n-min", type=_even_int, default=2)
    p.add_argument("--n-max", type=_even_int, default=30)
    p.add_argument("--step", type=_even_int, default=2)
    p.add_argument("--grid", choices=["cl", "equi"], default="cl")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--method", choices=["direct", "fast", "auto"], default="auto")
    p.add_argument("--family", choices=["mp", "emp"], default="mp")
    p.add_argument("--timing", action=argparse.BooleanOptionalAction, default=True,
                   help="--no-timing zeroes the seconds column for reproducible files")
    common(p)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("cubature-check", help="exactness sweep of the cubature rule")
    p.add_argument("--n", type=_even_int, required=True)
    p.add_argument("--extended", action="store_true",
                   help="also tabulate total degrees beyond the exactness range")
    common(p)
    p.set_defaults(func=cmd_cubature_check)

    p = sub.add_parser("mesh-certify", help="randomized check of the certified sup-norm bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--variant", choices=["A", "B", "MP2"], default="A")
    p.add_argument("--trials", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_mesh_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return int(exc.code) if exc.code else EXIT_OK
    if args.threads < 0:
        print("error: --threads must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (InvalidDegreeError, ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
