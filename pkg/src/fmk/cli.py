"""Command-line front end.

    fmk verify [all|<name>...] [--field q|p=N] [--seed N] [--samples N]
               [--json] [--mutate <check>]
    fmk dims --source T_s --target T_s --degree -2,2,1 [--cohomology] [--shape]
    fmk eval "<expr>" [--json]

The FMK_FIELD environment variable supplies the default field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import AlgebraElement
from .checks import CHECKS, VerifyContext, run_all
from .complexes import BUILTIN_OBJECTS
from .degrees import TriDegree
from .parsing import ParseError, parse_expression
from .scalars import FieldConfigError, field_from_name
from .search import DegreeSearchProblem, search_report
from .serialize import algebra_to_json, hom_to_json


def _field_argument(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--field",
        default=os.environ.get("FMK_FIELD", "q"),
        help="coefficient field: q (default) or p=<odd prime>",
    )


def _resolve_field(args):
    try:
        return field_from_name(args.field)
    except FieldConfigError as err:
        print("error: %s" % err, file=sys.stderr)
        raise SystemExit(2)


def _cmd_verify(args) -> int:
    field = _resolve_field(args)
    names = args.checks
    if not names or names == ["all"]:
        names = list(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        print("error: unknown check(s): %s" % ", ".join(unknown), file=sys.stderr)
        print("known checks: %s" % ", ".join(CHECKS), file=sys.stderr)
        return 2
    bad_mutations = [n for n in args.mutate if n not in CHECKS]
    if bad_mutations:
        print("error: unknown check(s) in --mutate: %s" % ", ".join(bad_mutations), file=sys.stderr)
        return 2
    ctx = VerifyContext(
        field=field, seed=args.seed, samples=args.samples, mutate=frozenset(args.mutate)
    )
    results = run_all(ctx, names)
    if args.json:
        payload = {
            "field": field.name,
            "seed": args.seed,
            "results": [r.to_json() for r in results],
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            print("[%s] %-28s %8.1f ms" % ("PASS" if r.status == "pass" else "FAIL", r.name, r.elapsed_ms))
            if r.status != "pass":
                print("       %s" % r.statement)
                for key, value in r.details.items():
                    print("       %s: %s" % (key, value))
        passed = sum(r.status == "pass" for r in results)
        print("%d/%d checks passed (field %s, seed %d)" % (passed, len(results), field.name, args.seed))
    return 0 if all(r.status == "pass" for r in results) else 1


def _cmd_dims(args) -> int:
    field = _resolve_field(args)
    try:
        parts = [int(x) for x in args.degree.split(",")]
        degree = TriDegree(*parts)
    except (ValueError, TypeError):
        print("error: --degree expects i,j,k", file=sys.stderr)
        return 2
    for label, name in (("--source", args.source), ("--target", args.target)):
        if name not in BUILTIN_OBJECTS:
            print(
                "error: %s must be one of %s" % (label, ", ".join(BUILTIN_OBJECTS)),
                file=sys.stderr,
            )
            return 2
    problem = DegreeSearchProblem(
        source=BUILTIN_OBJECTS[args.source](field),
        target=BUILTIN_OBJECTS[args.target](field),
        degree=degree,
        quotient_by_exact=args.cohomology,
        report_shape=args.shape,
    )
    report = search_report(problem)
    report["source"] = args.source
    report["target"] = args.target
    report["field"] = field.name
    print(json.dumps(report, indent=2))
    return 0


def _cmd_eval(args) -> int:
    field = _resolve_field(args)
    try:
        value = parse_expression(args.expression, field)
    except ParseError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    if args.json:
        if isinstance(value, AlgebraElement):
            print(json.dumps(algebra_to_json(value), indent=2))
        else:
            print(json.dumps(hom_to_json(value), indent=2))
    else:
        print(str(value))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fmk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run named verification checks")
    verify.add_argument("checks", nargs="*", help="check names (default: all)")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--json", action="store_true")
    verify.add_argument(
        "--mutate",
        action="append",
        default=[],
        metavar="CHECK",
        help="deliberately corrupt the named check (it must then fail)",
    )
    _field_argument(verify)
    verify.set_defaults(func=_cmd_verify)

    dims = sub.add_parser("dims", help="degree-search dimension report")
    dims.add_argument("--source", required=True)
    dims.add_argument("--target", required=True)
    dims.add_argument("--degree", required=True, help="i,j,k")
    dims.add_argument("--cohomology", action="store_true")
    dims.add_argument("--shape", action="store_true")
    _field_argument(dims)
    dims.set_defaults(func=_cmd_dims)

    evaluate = sub.add_parser("eval", help="evaluate an expression")
    evaluate.add_argument("expression")
    evaluate.add_argument("--json", action="store_true")
    _field_argument(evaluate)
    evaluate.set_defaults(func=_cmd_eval)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
