"""Command line: ``cyclident verify | sweep | selftest``.

Exit codes: 0 pass, 1 fail, 2 invalid or inapplicable parameters.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .acceptance import CRITERIA, run_all
from .identities import ANGLE_PARAM, REGISTRY, default_mode, run_identity
from .numeric import DEFAULT_PRECISION_BITS, SamplePlan, derive_seed, draw_sample_points
from .report import csv_header, csv_row
from .sweep import SweepSpec, param_columns, parse_range, run_sweep, summarize

PRECISION_ENV = "CYCLIDENT_PRECISION_BITS"
EXIT_PASS, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand.
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--mode", choices=["exact", "numeric", "both"], default=argparse.SUPPRESS)
    g.add_argument("--precision-bits", type=int, default=argparse.SUPPRESS)
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    g.add_argument("--format", choices=["human", "json", "csv"], default=argparse.SUPPRESS)
    g.add_argument("--parallelism", type=int, default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    parser = argparse.ArgumentParser(
        prog="cyclident",
        description="Exact and multiprecision checks of root-of-unity, cotangent and Bernoulli identities.",
        parents=[flags],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[flags], help="run one verification")
    v.add_argument("identity", help=f"one of: {', '.join(REGISTRY)}")
    for name in ("n", "m", "l", "delta", "order"):
        v.add_argument(f"--{name}", type=int)
    v.add_argument("--root-exp", dest="a", type=int, help="root exponent a (zeta = zeta_N^a)")
    v.add_argument("--theta", help="angle for q = e^(i theta); decimals or fractions, optional trailing 'pi'")
    v.add_argument("--x", help="angle for the cotangent and sine-ratio forms")

    s = sub.add_parser("sweep", parents=[flags], help="run a parameter grid")
    s.add_argument("identity")
    s.add_argument(
        "--range", dest="ranges", action="append", default=[], metavar="NAME=SPEC",
        help="min:max[:step], comma list, or for a: all|primitive|admissible",
    )
    s.add_argument("--samples", type=int, default=1, help="seeded angles per cell in numeric mode")
    s.add_argument("--cap", type=int, help="max root exponents per order for symbolic a ranges")
    s.add_argument("--output", help="write records here instead of stdout")

    t = sub.add_parser("selftest", parents=[flags], help="run the acceptance suite")
    t.add_argument("--json", action="store_true", help="machine-readable scorecard")
    t.add_argument("--only", help="comma-separated criterion numbers")
    return parser


def _settings(args) -> dict:
    env = os.environ.get(PRECISION_ENV)
    precision = getattr(args, "precision_bits", None)
    if precision is None:
        try:
            precision = int(env) if env else DEFAULT_PRECISION_BITS
        except ValueError:
            precision = -1
    return {
        "mode": getattr(args, "mode", None),
        "precision_bits": precision,
        "seed": getattr(args, "seed", 0),
        "format": getattr(args, "format", "human"),
        "parallelism": getattr(args, "parallelism", 1),
    }


def _emit(reports, fmt: str, out) -> None:
    if fmt == "json":
        for r in reports:
            out.write(r.to_json() + "\n")
    elif fmt == "csv":
        cols = param_columns(reports)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(csv_header(cols))
        for r in reports:
            w.writerow(csv_row(r, cols))
    else:
        for r in reports:
            out.write(r.human() + "\n")


def cmd_verify(args, opts) -> int:
    identity = args.identity
    if identity not in REGISTRY:
        print(f"error: unknown identity {identity!r}; choose from {', '.join(REGISTRY)}", file=sys.stderr)
        return EXIT_INVALID
    mode = opts["mode"]
    modes = [m for m in ("exact", "numeric") if m in REGISTRY[identity]] if mode == "both" else [mode or default_mode(identity)]
    params = {k: getattr(args, k) for k in ("n", "m", "l", "delta", "order", "a", "theta", "x") if getattr(args, k) is not None}
    reports = []
    for m in modes:
        if m not in REGISTRY[identity]:
            print(f"error: {identity} has no {m} mode", file=sys.stderr)
            return EXIT_INVALID
        cell = dict(params)
        angle = ANGLE_PARAM.get(identity)
        if m == "numeric" and angle not in cell and "n" in cell:
            plan_cls = SamplePlan.for_unit_circle if angle == "theta" else SamplePlan.for_cot_argument
            plan = plan_cls(max(cell["n"], 1), derive_seed(opts["seed"], identity, cell["n"]), 1)
            cell[angle] = f"{draw_sample_points(plan)[0]}pi"
        try:
            reports.append(run_identity(identity, m, cell, opts["precision_bits"]))
        except (KeyError, TypeError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
    _emit(reports, opts["format"], sys.stdout)
    for r in reports:
        if r.status == "inapplicable":
            print(f"inapplicable: {r.detail}", file=sys.stderr)
    if any(r.status == "fail" for r in reports):
        return EXIT_FAIL
    if any(r.status == "inapplicable" for r in reports):
        return EXIT_INVALID
    return EXIT_PASS


def cmd_sweep(args, opts) -> int:
    try:
        ranges = dict(parse_range(r) for r in args.ranges)
        spec = SweepSpec(
            identity=args.identity,
            ranges=ranges,
            mode=opts["mode"],
            precision_bits=opts["precision_bits"],
            output_format=opts["format"],
            parallelism=max(1, opts["parallelism"]),
            seed=opts["seed"],
            samples=args.samples,
            cap=args.cap,
        )
        reports = run_sweep(spec)
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not reports:
        print("error: the sweep grid is empty", file=sys.stderr)
        return EXIT_INVALID
    counts = summarize(reports)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        _emit(reports, spec.output_format, out)
        if spec.output_format == "json":
            out.write(json.dumps({"summary": counts}) + "\n")
        elif spec.output_format == "human":
            out.write(" ".join(f"{k}={v}" for k, v in counts.items()) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    if spec.output_format == "csv" or args.output:
        print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return EXIT_PASS if counts["failed"] == 0 else EXIT_FAIL


def cmd_selftest(args, opts) -> int:
    try:
        numbers = [int(x) for x in args.only.split(",")] if args.only else list(CRITERIA)
    except ValueError:
        print(f"error: bad --only list {args.only!r}", file=sys.stderr)
        return EXIT_INVALID
    unknown = [k for k in numbers if k not in CRITERIA]
    if unknown:
        print(f"error: no criterion numbered {unknown}", file=sys.stderr)
        return EXIT_INVALID
    results = run_all(numbers)
    ok = all(r.passed for r in results)
    if args.json or opts["format"] == "json":
        print(json.dumps({"passed": ok, "criteria": [r.to_dict() for r in results]}, indent=2))
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return EXIT_PASS if ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    opts = _settings(args)
    if opts["precision_bits"] < 64:
        print(f"error: precision must be an integer of at least 64 bits (check --precision-bits / {PRECISION_ENV})", file=sys.stderr)
        return EXIT_INVALID
    handler = {"verify": cmd_verify, "sweep": cmd_sweep, "selftest": cmd_selftest}[args.command]
    return handler(args, opts)


if __name__ == "__main__":
    sys.exit(main())
