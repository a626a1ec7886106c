"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain precondition failure (e.g. the closure is a link).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .alexander import alexander_reduced, alexander_thm2
from .braid import BraidParseError, NotAKnotError, cable, parse_braid
from .burau import psi_unreduced, reduced_burau
from .ring import DEFAULT_ORDER, parse_rational
from .rt import universal_invariant
from .verify import SUITES, SuiteArgs, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj)


def _braid(args):
    return parse_braid(args.braid, args.strands)


def cmd_alexander(args) -> int:
    beta = _braid(args)
    delta = alexander_reduced(beta) if args.route == "reduced" else alexander_thm2(beta)
    if args.json:
        print(_dump({
            "alexander": delta.to_json(),
            "checks": {"symmetry": delta.is_symmetric(), "at_one": str(delta.at_one())},
        }))
    else:
        print(delta)
    return EXIT_OK


def cmd_invariant(args) -> int:
    z = universal_invariant(_braid(args), args.order)
    if args.json:
        print(_dump(z.to_json()))
    else:
        print(z.series)
    return EXIT_OK


def cmd_burau(args) -> int:
    beta = _braid(args)
    if args.reduced:
        red = reduced_burau(beta)
        print(_dump({"matrix": red.matrix.to_json(), "star_row": [x.to_json() for x in red.star_row]}))
    else:
        print(_dump(psi_unreduced(beta).to_json()))
    return EXIT_OK


def cmd_cable(args) -> int:
    beta = _braid(args)
    c = cable(beta, args.n)
    if args.json:
        print(_dump({"strands": c.strands, "braid": str(c), "alexander": alexander_thm2(c).to_json()}))
    else:
        print(c)
    return EXIT_OK


def cmd_verify(args) -> int:
    sargs = SuiteArgs(
        seed=args.seed,
        count=args.count,
        max_strands=args.max_strands,
        max_length=args.max_length,
        order=args.order,
        degree=args.degree,
        lam=args.lam,
        jobs=args.jobs,
    )
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    reports = []
    for name in suites:
        rep = run_suite(name, sargs, command=args.argv)
        ok &= rep.ok
        reports.append(rep)
        if not args.json:
            for f in rep.failures:
                print(f"FAIL {name} [{f.item}] {f.detail}")
            print(f"{name}: {rep.passed} passed, {rep.failed} failed")
    if args.json:
        payload = [r.to_json(args.timings) for r in reports]
        print(_dump(payload[0] if len(payload) == 1 else payload))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussknot",
        description="Alexander polynomials and the h-series universal invariant of braid closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def braid_args(p):
        p.add_argument("--braid", required=True, help='signed generator indices, e.g. "1 -2 1 -2"')
        p.add_argument("--strands", type=int, default=None)

    p = sub.add_parser("alexander", help="Alexander polynomial of the closure")
    braid_args(p)
    p.add_argument("--route", choices=("thm2", "reduced"), default="thm2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("invariant", help="universal invariant as a series in h = a - 1")
    braid_args(p)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("burau", help="Burau matrix as JSON")
    braid_args(p)
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(func=cmd_burau)

    p = sub.add_parser("cable", help="zero-framed cable composed with the cycling braid")
    braid_args(p)
    p.add_argument("--n", type=int, default=2, help="cable multiplicity")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("verify", help="run a property suite over a braid corpus")
    p.add_argument("--suite", required=True, choices=(*SUITES, "all"))
    p.add_argument("--max-strands", type=int, default=5)
    p.add_argument("--max-length", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200, help="number of random words")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--degree", type=int, default=12, help="monomial degree bound (hopf)")
    p.add_argument("--lambda", dest="lam", type=parse_rational, default=None,
                   help="restrict the hopf suite to one lambda, e.g. 5/2")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include per-item seconds in JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.argv = argv
    if getattr(args, "strands", None) is not None and args.strands < 1:
        print("error: --strands must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BraidParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NotAKnotError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
