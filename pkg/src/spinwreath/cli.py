"""Command-line front end.

    spinwreath table  --group z2 --n 2 [--format json|csv|latex] [--numeric]
    spinwreath check  --group s3 --n 2
    spinwreath oracle --group z2 --n 2 --seed 7 [--tol 1e-8]

Exit codes: 0 success, 1 failed check or oracle mismatch, 2 bad input,
3 internal invariant breach, 4 oracle size cap exceeded.  The cap is
5000 elements unless the environment variable SPINWREATH_ORACLE_CAP or
--cap overrides it.
"""

import argparse
import json
import os
import sys

from . import oracle, render, wreath
from .groups import GroupDataError, load_group
from .oracle import OracleSizeError
from .wreath import InternalInvariantError, full_table, run_checks


def _build_parser():
    p = argparse.ArgumentParser(
        prog="spinwreath",
        description="Exact spin character tables of wreath-product double covers")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--group", required=True,
                        help="built-in group name or group file path")
        sp.add_argument("--n", type=int, required=True,
                        help="wreath weight (number of moved letters)")
        sp.add_argument("--output", "-o", help="write to a file instead of stdout")

    t = sub.add_parser("table", help="compute and render the spin table")
    common(t)
    t.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    t.add_argument("--numeric", action="store_true",
                   help="include numeric values")
    t.add_argument("--precision", type=int, default=10,
                   help="significant digits for numeric rendering")

    c = sub.add_parser("check", help="run the invariant suite on the table")
    common(c)

    o = sub.add_parser("oracle", help="brute-force comparison")
    common(o)
    o.add_argument("--seed", type=int, required=True)
    o.add_argument("--tol", type=float, default=1e-8)
    o.add_argument("--cap", type=int, default=None,
                   help="element-count cap (default 5000 or "
                        "SPINWREATH_ORACLE_CAP)")
    return p


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        gd = load_group(args.group)
        if args.n < 1:
            raise GroupDataError("n must be at least 1, got %d" % args.n)
    except GroupDataError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2

    try:
        table = full_table(args.n, gd)
    except InternalInvariantError as e:
        print("internal invariant breached: %s" % e, file=sys.stderr)
        return 3

    if args.command == "table":
        try:
            if args.format == "json":
                text = render.table_to_json(table, args.numeric, args.precision) + "\n"
            elif args.format == "csv":
                text = render.table_to_csv(table, args.numeric, args.precision)
            else:
                text = render.table_to_latex(table)
        except InternalInvariantError as e:
            print("internal invariant breached: %s" % e, file=sys.stderr)
            return 3
        _emit(text, args.output)
        return 0

    if args.command == "check":
        try:
            report = run_checks(table, gd)
        except InternalInvariantError as e:
            print("internal invariant breached: %s" % e, file=sys.stderr)
            return 3
        _emit(json.dumps(report, indent=1) + "\n", args.output)
        if not report["ok"]:
            first = next(c["name"] for c in report["checks"] if not c["ok"])
            print("check failed: %s" % first, file=sys.stderr)
            return 1
        return 0

    if args.command == "oracle":
        cap = args.cap
        if cap is None and os.environ.get("SPINWREATH_ORACLE_CAP"):
            cap = int(os.environ["SPINWREATH_ORACLE_CAP"])
        try:
            report = oracle.compare(table, gd, tol=args.tol, seed=args.seed,
                                    cap=cap)
        except OracleSizeError as e:
            print("error: %s" % e, file=sys.stderr)
            return 4
        _emit(json.dumps(report, indent=1) + "\n", args.output)
        return 0 if report["ok"] else 1

    return 2


if __name__ == "__main__":
    sys.exit(main())
