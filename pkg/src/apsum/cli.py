"""Command-line front end.

Exit codes: 0 success, 1 a coprime grid point where integrality and the
``F(n) | m`` test disagree, 2 usage error. Rationals are printed as
``num/den``; csv and json carry every number as an exact string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from apsum.bernoulli import bernoulli_number
from apsum.exactcore import render_rat
from apsum.integrality import (
    F_val,
    disagreements,
    reports_to_csv,
    reports_to_json,
    verify_theorem2_grid,
)
from apsum.powersum import ProgressionParams, coeffs_theorem1
from apsum.triangles import format_rows, stirling1_row, stirling2_row, whitney_row

FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    pass


def _emit_rows(header: Sequence[str], rows: list[Sequence[str]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in rows], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return "\n".join(", ".join(row) for row in [header, *rows])


def cmd_coeffs(args) -> int:
    if args.m < 1 or args.n < 1 or args.r < 0:
        raise UsageError(f"need m >= 1, r >= 0, n >= 1 (got m={args.m}, r={args.r}, n={args.n})")
    poly = coeffs_theorem1(ProgressionParams(args.m, args.r, args.n))
    coeffs = poly.coeff_strings()
    if args.format == "json":
        out = json.dumps(
            {
                "m": str(args.m),
                "r": str(args.r),
                "n": str(args.n),
                "coefficients": coeffs,
                "polynomial": poly.render(),
            },
            indent=2,
        )
    elif args.format == "csv":
        out = _emit_rows(["i", "coefficient"], [[str(i), c] for i, c in enumerate(coeffs)], "csv")
    else:
        out = f"coefficients: [{', '.join(coeffs)}]\npolynomial: {poly.render()}"
    print(out)
    return 0


def cmd_ftable(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    rows = [[str(n), str(F_val(n))] for n in range(1, args.max_n + 1)]
    print(_emit_rows(["n", "F"], rows, args.format))
    return 0


def cmd_fvalue(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    value = str(F_val(args.n))
    if args.format == "table":
        print(value)
    else:
        print(_emit_rows(["n", "F"], [[str(args.n), value]], args.format))
    return 0


def cmd_verify(args) -> int:
    if args.max_m < 1 or args.max_n < 1 or args.max_r < 0:
        raise UsageError("need --max-m >= 1, --max-r >= 0, --max-n >= 1")
    reports = verify_theorem2_grid(
        args.max_m, args.max_r, args.max_n, coprime_only=args.coprime_only, workers=args.workers
    )
    if args.format == "csv":
        print(reports_to_csv(reports), end="")
    elif args.format == "json":
        print(reports_to_json(reports))
    else:
        header = ["m", "r", "n", "is_integral", "F", "predicate", "agrees", "coefficients"]
        rows = []
        for rep in reports:
            rec = rep.as_record()
            rec["coefficients"] = "[" + " ".join(rec["coefficients"]) + "]"
            rows.append([str(rec[k]).lower() if isinstance(rec[k], bool) else rec[k] for k in header])
        print(_emit_rows(header, rows, "table"))
    bad = disagreements(reports, coprime_only=True)
    for rep in bad:
        p = rep.params
        print(
            f"DISAGREEMENT m={p.m} r={p.r} n={p.n}: integral={rep.is_integral} "
            f"F(n)={rep.F_of_n} coefficients=[{' '.join(rep.coeffs.coeff_strings())}]",
            file=sys.stderr,
        )
    return 1 if bad else 0


def cmd_bernoulli(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    value = render_rat(bernoulli_number(args.n))
    if args.format == "table":
        print(value)
    else:
        print(_emit_rows(["n", "B"], [[str(args.n), value]], args.format))
    return 0


def _dump_triangle(rowfn, n: int, args) -> int:
    if n < 0:
        raise UsageError("--n must be >= 0")
    rows = [rowfn(i) for i in range(n + 1)] if args.all_rows else [rowfn(n)]
    if args.format == "table":
        print(format_rows(rows))
    elif args.format == "json":
        print(json.dumps([[str(v) for v in row] for row in rows]))
    else:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        print(buf.getvalue(), end="")
    return 0


def cmd_whitney(args) -> int:
    return _dump_triangle(lambda i: whitney_row(args.m, args.r, i), args.n, args)


def cmd_stirling(args) -> int:
    rowfn = stirling1_row if args.kind == "1" else stirling2_row
    return _dump_triangle(rowfn, args.n, args)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="apsum",
        description="Exact coefficients of power sums over arithmetic progressions.",
    )
    parser.add_argument("--format", choices=FORMATS, default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="coefficients of S(l) for (m, r, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("ftable", parents=[common], help="table of F(n)")
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_ftable)

    p = sub.add_parser("fvalue", parents=[common], help="single F(n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_fvalue)

    p = sub.add_parser("verify", parents=[common], help="integrality vs F(n) | m over a grid")
    p.add_argument("--max-m", type=int, default=6)
    p.add_argument("--max-r", type=int, default=6)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument(
        "--coprime-only",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="restrict to gcd(m, r) = 1 (default); non-coprime points never affect the exit code",
    )
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli number B_n (B_1 = -1/2)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("whitney", parents=[common], help="r-Whitney row W_{m,r}(n, 0..n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all-rows", action="store_true", help="dump rows 0..n")
    p.set_defaults(func=cmd_whitney)

    p = sub.add_parser("stirling", parents=[common], help="Stirling row (kind 1 is signed)")
    p.add_argument("--kind", choices=("1", "2"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all-rows", action="store_true", help="dump rows 0..n")
    p.set_defaults(func=cmd_stirling)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"apsum {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
