"""Command line front end.

Exit codes: 0 success, 1 a cross-check or verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import sweep
from .criteria import corollary_classify, delta_classify
from .exact import EvenModulus, NotCoprime, format_rational, jacobi_symbol
from .explorer import emit_csv, group_reports, pairs_search
from .permutation import inversion_count_direct, inversion_count_salie
from .sums import dedekind_sum_fast, dedekind_sum_meyer, dedekind_sum_naive

SUM_METHODS = {
    "naive": dedekind_sum_naive,
    "fast": dedekind_sum_fast,
    "meyer": dedekind_sum_meyer,
}
INV_METHODS = {"direct": inversion_count_direct, "salie": inversion_count_salie}


class UsageError(Exception):
    pass


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(_text(v) for v in value)
    return str(value)


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def cmd_sum(args) -> int:
    if args.method != "all":
        print(format_rational(SUM_METHODS[args.method](args.a, args.b).value))
        return 0
    values = {name: fn(args.a, args.b).value for name, fn in SUM_METHODS.items()}
    for name, v in values.items():
        print(f"{name}: {format_rational(v)}")
    return 0 if len(set(values.values())) == 1 else 1


def cmd_inv(args) -> int:
    print(INV_METHODS[args.method](args.a, args.b).value)
    return 0


def cmd_jacobi(args) -> int:
    print(jacobi_symbol(args.a, args.b))
    return 0


def cmd_classify(args) -> int:
    report = delta_classify(args.a1, args.a2, args.b)
    d = report.to_dict()
    if args.format == "json":
        print(_dump(d))
    else:
        for k, v in d.items():
            print(f"{k}: {_text(v)}")
    return 0 if report.consistent else 1


def cmd_pairs(args) -> int:
    if args.b < 2:
        raise UsageError("pairs needs b >= 2")
    groups = pairs_search(args.b)
    if args.format == "json":
        print(_dump([g.to_dict() for g in groups]))
    else:
        emit_csv(group_reports(groups), sys.stdout)
    return 0


def cmd_corollary(args) -> int:
    if args.b < 1:
        raise UsageError("b must be positive")
    verdict = corollary_classify(args.b)
    print(_dump(verdict.to_dict()))
    # a failure is only a violation where the hypothesis applies
    return 1 if verdict.decomposition is not None and not verdict.holds else 0


def cmd_verify(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    try:
        config = sweep.SweepConfig(args.bmax, checks, args.jobs, args.out)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = sweep.verify_sweep(config)
    for line in report.lines():
        print(line)
    total = sum(report.counts.values())
    bad = sum(len(v) for v in report.violations.values())
    print(f"total: {total} checks, {bad} violations")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedekind",
        description="Exact Dedekind sums, multiplier-permutation inversions and "
        "equality criteria mod Z, 2Z, 4Z.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="Dedekind sum s(a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--method", choices=[*SUM_METHODS, "all"], default="fast")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("inv", help="inversion count I(a, b) of x -> ax mod b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--method", choices=list(INV_METHODS), default="salie")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("jacobi", help="Jacobi symbol (a/b), b odd")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("classify", help="classify 12s(a1,b) - 12s(a2,b)")
    p.add_argument("a1", type=int)
    p.add_argument("a2", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pairs", help="groups of units mod b with equal Dedekind sums")
    p.add_argument("b", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("corollary", help="test the equality classification for b = 2^e p")
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_corollary)

    p = sub.add_parser("verify", help="exhaustive identity sweep up to --bmax")
    p.add_argument("--bmax", type=int, required=True)
    p.add_argument("--checks", default=",".join(sweep.CHECKS),
                   help="comma-separated subset of: " + ", ".join(sweep.CHECKS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="write the JSON summary here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, NotCoprime, EvenModulus, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
