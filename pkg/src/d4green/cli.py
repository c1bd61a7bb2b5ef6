"""Command line front end.

Subcommands::

    d4green multiply "[V(2,0)]" "[V(2,0)]"
    d4green dual "[O^2V(0)]"
    d4green presentation normal-form "y*z"
    d4green presentation to-modules "X_{2,1/3}"
    d4green presentation from-modules "[O^2V(0)]"
    d4green verify table --max-s 2 --etas 0,1,oo --seed 7 --jobs 2

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .grammar import (
    ParseError,
    element_to_json,
    parse_element,
    parse_pres_element,
    pres_to_json,
    render_element,
    render_pres_element,
)
from .green import dual, eta, mul
from .presentation import from_green, to_green
from .verify import DEFAULT_ETAS, run_scope


def _parse_etas(csv: str):
    items = [part.strip() for part in csv.split(",")]
    return tuple(eta(part) for part in items if part)


def _emit(args, element=None, pres=None) -> None:
    if args.format == "json":
        payload = element_to_json(element) if element is not None else pres_to_json(pres)
        print(json.dumps(payload, separators=(",", ":")))
    elif element is not None:
        print(render_element(element))
    else:
        print(render_pres_element(pres))


def _cmd_multiply(args) -> int:
    product = mul(parse_element(args.e1), parse_element(args.e2))
    _emit(args, element=product)
    return 0


def _cmd_dual(args) -> int:
    _emit(args, element=dual(parse_element(args.expr)))
    return 0


def _cmd_presentation(args) -> int:
    if args.mode == "normal-form":
        _emit(args, pres=parse_pres_element(args.expr))
    elif args.mode == "to-modules":
        _emit(args, element=to_green(parse_pres_element(args.expr)))
    else:
        _emit(args, pres=from_green(parse_element(args.expr)))
    return 0


def _cmd_verify(args) -> int:
    etas = _parse_etas(args.etas) if args.etas is not None else DEFAULT_ETAS
    reports = run_scope(args.scope, max_s=args.max_s, etas=etas, seed=args.seed, jobs=args.jobs)
    for report in reports:
        print(report.render())
    return 0 if all(r.passed for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="d4green",
        description="Green ring calculator for the Drinfeld double of Sweedler's Hopf algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("multiply", help="decompose a product of two elements")
    p.add_argument("e1")
    p.add_argument("e2")
    add_format(p)
    p.set_defaults(func=_cmd_multiply)

    p = sub.add_parser("dual", help="dual of an element")
    p.add_argument("expr")
    add_format(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("presentation", help="normal forms and conversions")
    p.add_argument("mode", choices=("normal-form", "to-modules", "from-modules"))
    p.add_argument("expr")
    add_format(p)
    p.set_defaults(func=_cmd_presentation)

    p = sub.add_parser("verify", help="cross-check the models over a grid")
    p.add_argument("scope", choices=("table", "presentation", "braiding", "all"))
    p.add_argument("--max-s", type=int, default=2, dest="max_s")
    p.add_argument("--etas", default=None, help="comma-separated rationals or oo (default 0,1,oo)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
