"""Command-line front end.

Exit codes: 0 success (or "member"), 1 "not a member", 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import parse_polynomial, parse_rational
from .errors import MoncurveError
from .multiplier import (
    analyze,
    generators_up_to,
    jumping_numbers,
    member,
    render_analysis,
)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moncurve", description="Multiplier ideals of monomial space curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def curve_args(p):
        p.add_argument("n", type=int, nargs=3, metavar="N", help="weights n1 n2 n3")
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p = sub.add_parser("analyze", help="generators, term ideal, cones, G and lct")
    curve_args(p)

    p = sub.add_parser("member", help="decide f in J(I^lambda)")
    curve_args(p)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--plain-ord", action="store_true", help="use ord_m instead of nu_m in the G-conditions")

    p = sub.add_parser("gens", help="homogeneous generators of J(I^lambda) up to a degree bound")
    curve_args(p)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--degree-bound", type=int)
    p.add_argument("--plain-ord", action="store_true")

    p = sub.add_parser("jumps", help="jumping numbers in (0, T]")
    curve_args(p)
    p.add_argument("--upto", type=_rational, required=True)
    p.add_argument("--degree-bound", type=int)
    p.add_argument("--candidates", action="store_true", help="also list the candidate values")
    p.add_argument("--plain-ord", action="store_true")

    p = sub.add_parser("lct", help="log canonical threshold")
    curve_args(p)
    return parser


def _run(args) -> int:
    ca = analyze(args.n)
    for w in ca.warnings:
        print(f"warning: {w}", file=sys.stderr)

    if args.command == "analyze":
        print(dump_json(ca.to_json()) if args.json else render_analysis(ca))
        return 0

    if args.command == "lct":
        print(dump_json({"n": list(ca.n), "lct": str(ca.lct)}) if args.json else str(ca.lct))
        return 0

    if args.command == "member":
        f = parse_polynomial(args.poly)
        verdict, parts = member(ca, f, args.lam, plain_ord=args.plain_ord)
        if args.json:
            print(dump_json({"n": list(ca.n), "lambda": str(args.lam), "poly": str(f),
                             "member": verdict, "breakdown": parts}))
        else:
            print("true" if verdict else "false")
            print(f"  symbolic power I^({parts.get('symbolic_order', 0)}): {parts['symbolic']}")
            print(f"  J(tau^lambda): {parts['term_ideal']}"
                  + (f" (fails at {', '.join(parts['failing_monomials'])})" if parts.get("failing_monomials") else ""))
            for v in parts["valuations"]:
                print(f"  m = {v['m']}: value {v['value']} >= {v['threshold']}: {v['ok']}")
        return 0 if verdict else 1

    if args.command == "gens":
        rep = generators_up_to(ca, args.lam, args.degree_bound, plain_ord=args.plain_ord)
        for w in rep.warnings:
            print(f"warning: {w}", file=sys.stderr)
        if args.json:
            print(dump_json(rep.to_json()))
        else:
            for d, f in rep.generators:
                print(f"[{d}] {f}")
            print(f"(complete up to n-degree {rep.degree_bound})")
        return 0

    if args.command == "jumps":
        rep = jumping_numbers(ca, args.upto, args.degree_bound, plain_ord=args.plain_ord)
        if args.json:
            print(dump_json(rep.to_json(with_candidates=args.candidates)))
        else:
            for x in rep.verified_jumps:
                d, f = rep.witnesses[x]
                print(f"{x}    witness (degree {d}): {f}")
            if args.candidates:
                print("candidates: " + ", ".join(str(c) for c in rep.candidates))
            print(f"({rep.caveat})")
        return 0
    raise AssertionError(args.command)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except (MoncurveError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
