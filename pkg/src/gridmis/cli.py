"""Command-line front end.

Subcommands: build (adjacency export), enumerate (MIS stream), count
(slice-DP count), nimis (orbit count / report), avgsize, distribution,
formulas, verify (cross-check suite) and trend.  All output is
deterministic for a fixed invocation.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import sys
from fractions import Fraction

from . import formulas, harness, strings, symmetry
from .counting import (average_size, count_mis_dp, enumerate_mis,
                       format_mis_line, size_polynomial_dp)
from .grids import GridFamily, build, export_adjacency

_FAMILIES = [f.value for f in GridFamily]


def _add_instance_args(p):
    p.add_argument("--family", required=True, choices=_FAMILIES)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gridmis",
        description="Exact MIS statistics of grid-like graphs, cross-verified.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print the adjacency-list export")
    _add_instance_args(p)

    p = sub.add_parser("enumerate", help="print the canonical MIS stream")
    _add_instance_args(p)
    p.add_argument("--budget-vertices", type=int, default=36)

    p = sub.add_parser("count", help="print |MIS| via the slice DP")
    _add_instance_args(p)
    p.add_argument("--budget-width", type=int, default=12)

    p = sub.add_parser("nimis", help="print the non-isomorphic MIS count")
    _add_instance_args(p)
    p.add_argument("--orbits", action="store_true",
                   help="print the full orbit report instead of the count")

    p = sub.add_parser("avgsize", help="print the exact average MIS size")
    _add_instance_args(p)
    p.add_argument("--decimal", type=int, metavar="DIGITS",
                   help="also print a truncated decimal rendering")

    p = sub.add_parser("distribution", help="print the per-size MIS counts")
    _add_instance_args(p)

    p = sub.add_parser("formulas", help="evaluate a closed form")
    p.add_argument("--name", required=True, choices=[
        "mis-count-2xn", "nimis-2xn", "nimis-tube-3xn", "total-size-2xn",
        "average-2xn", "band-counts", "mobius-counts", "size-distribution",
        "band-nimis-compositions", "string-count", "golden"])
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int,
                   help="emit a CSV table n,quantity,value for n..n-max")
    p.add_argument("--r", type=int, help="size parameter for size-distribution")
    p.add_argument("--kind", choices=list("XYZEOB"),
                   help="string class for string-count")
    p.add_argument("--digits", type=int, default=50, help="digits for golden")

    p = sub.add_parser("verify", help="run the cross-verification suite")
    p.add_argument("--all", action="store_true",
                   help="accepted for compatibility; the suite always runs fully")
    p.add_argument("--config", help="flat key = value config file")
    p.add_argument("--format", choices=["human", "csv", "json"], default=None)
    p.add_argument("--budget-vertices", type=int, default=None)
    p.add_argument("--budget-width", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("trend", help="NIMIS ratio and average-size trend table")
    p.add_argument("--format", choices=["human", "csv"], default="human")
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _graph(args):
    return build(GridFamily(args.family), args.m, args.n)


def _dispatch(args):
    if args.command == "build":
        sys.stdout.write(export_adjacency(_graph(args)))
        return 0

    if args.command == "enumerate":
        g = _graph(args)
        for mask in enumerate_mis(g, args.budget_vertices):
            print(format_mis_line(g, mask))
        return 0

    if args.command == "count":
        print(count_mis_dp(_graph(args), args.budget_width))
        return 0

    if args.command == "nimis":
        g = _graph(args)
        if args.orbits:
            mis_list = list(enumerate_mis(g))
            part = symmetry.orbit_partition(g, mis_list, symmetry.full_group(g))
            sys.stdout.write(symmetry.orbit_report(g, mis_list, part))
        else:
            print(symmetry.nimis_count(g))
        return 0

    if args.command == "avgsize":
        value = average_size(_graph(args))
        print(value)
        if args.decimal:
            print(harness.frac_to_decimal(value, args.decimal))
        return 0

    if args.command == "distribution":
        poly = size_polynomial_dp(_graph(args))
        for r in sorted(poly):
            print(f"{r} {poly[r]}")
        return 0

    if args.command == "formulas":
        return _run_formulas(args)

    if args.command == "verify":
        cfg = harness.load_config(args.config) if args.config else harness.RunConfig()
        overrides = {}
        if args.budget_vertices is not None:
            overrides["enumeration_budget"] = args.budget_vertices
        if args.budget_width is not None:
            overrides["dp_width_budget"] = args.budget_width
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.format is not None:
            overrides["output_format"] = args.format
        if overrides:
            from dataclasses import replace
            cfg = replace(cfg, **overrides)
        cases = harness.run_verification_suite(cfg)
        sys.stdout.write(harness.format_report(cases, cfg.output_format))
        return 0 if all(c.passed for c in cases) else 1

    if args.command == "trend":
        rows = harness.trend_report()
        sys.stdout.write(harness.format_trend(rows, args.format))
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def _formula_value(name, args, n):
    if name == "mis-count-2xn":
        return formulas.mis_count_2xn(n)
    if name == "nimis-2xn":
        return formulas.nimis_2xn(n)
    if name == "nimis-tube-3xn":
        return formulas.nimis_tube_3xn(n)
    if name == "total-size-2xn":
        return formulas.total_size_2xn(n)
    if name == "average-2xn":
        return formulas.average_2xn_exact(n)
    if name == "band-counts":
        c = formulas.band_counts(n)
        return f"count={c.mis_count} total={c.total_size} average={c.average}"
    if name == "mobius-counts":
        c = formulas.mobius_counts(n)
        return f"count={c.mis_count} total={c.total_size} average={c.average}"
    if name == "size-distribution":
        if args.r is None:
            raise ValueError("size-distribution needs --r")
        return formulas.size_distribution_2xn_cyclic(n, args.r)
    if name == "band-nimis-compositions":
        return strings.band_nimis_via_compositions(n)
    if name == "string-count":
        if not args.kind:
            raise ValueError("string-count needs --kind")
        return strings.count_strings(args.kind, n)
    raise ValueError(f"unknown formula {name}")


def _run_formulas(args):
    if args.name == "golden":
        ref = formulas.golden_ratio_ref(args.digits)
        print(f"phi={ref.phi}")
        print(f"phi/sqrt5={ref.phi_over_sqrt5}")
        return 0
    if args.n is None:
        raise ValueError(f"{args.name} needs --n")
    if args.n_max is not None:
        print("n,quantity,value")
        for n in range(args.n, args.n_max + 1):
            value = _formula_value(args.name, args, n)
            print(f"{n},{args.name},{_plain(value)}")
        return 0
    print(_plain(_formula_value(args.name, args, args.n)))
    return 0


def _plain(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


if __name__ == "__main__":
    sys.exit(main())
