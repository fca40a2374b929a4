"""Command-line front end: ``threshdist <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
The default output format can be set with ``THRESHDIST_FORMAT`` (text/json).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from . import charpoly as cp
from .cospectral import (
    Corollary1Error,
    corollary1_generate,
    corollary1_survey,
    search,
    theorem2_generate,
)
from .gamma import gamma_table
from .oracle import verify_all, verify_graph
from .seqcore import SequenceError, parse_sequence, to_blocks

FORMAT_ENV = "THRESHDIST_FORMAT"


class UsageError(Exception):
    pass


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _blocks(text: str):
    s = parse_sequence(text)
    b = to_blocks(s)
    if len(b.runs) % 2:
        raise UsageError(f"{text!r} is not a connected graph with at least 2 vertices")
    return b


def _workers(args) -> int:
    return args.parallelism or os.cpu_count() or 1


def cmd_charpoly(args, out: TextIO) -> int:
    b = _blocks(args.sequence)
    methods = cp.METHODS if args.method == "all" else (args.method,)
    results = [cp.full_charpoly(b, m) for m in methods]
    agree = len({r.full_poly for r in results}) == 1
    if args.format == "json":
        _dump(results[0].to_json() if len(results) == 1 else [r.to_json() for r in results], out)
    elif len(results) == 1:
        out.write(results[0].full_poly.format() + "\n")
    else:
        for r in results:
            out.write(f"{r.method}: {r.full_poly.format()}\n")
    return 0 if agree else 1


def cmd_multiplicities(args, out: TextIO) -> int:
    b = _blocks(args.sequence)
    m = cp.multiplicities(b)
    if args.format == "json":
        _dump({"blocks": list(b.runs), "m2": m.m_minus2, "m1": m.m_minus1}, out)
    else:
        out.write(f"m(-2) = {m.m_minus2}, m(-1) = {m.m_minus1}\n")
    return 0


def cmd_gamma(args, out: TextIO) -> int:
    text = args.sequence
    if "," in text:
        try:
            a = [int(v) for v in text.split(",")]
        except ValueError:
            raise UsageError(f"bad integer list {text!r}") from None
    else:
        a = list(to_blocks(parse_sequence(text)).runs)
    if args.negate:
        a = [-v for v in a]
    table = gamma_table(a, signed_input=args.negate)
    if args.format == "json":
        _dump(table.to_json(), out)
    else:
        for l, v in enumerate(table.values):
            out.write(f"gamma[{table.n},{l}] = {v}\n")
    return 0


def cmd_verify(args, out: TextIO) -> int:
    if args.exhaustive is not None:
        reports = verify_all(args.exhaustive, workers=_workers(args))
    elif args.sequence:
        reports = [verify_graph(_blocks(args.sequence))]
    else:
        raise UsageError("verify needs a sequence or --exhaustive N")
    failures = [r for r in reports if not r.passed]
    if args.format == "json":
        if args.exhaustive is None:
            _dump(reports[0].to_json(), out)
        else:
            _dump(
                {
                    "max_vertices": args.exhaustive,
                    "graphs": len(reports),
                    "failures": [r.to_json() for r in failures],
                },
                out,
            )
    else:
        for r in failures if args.exhaustive is not None else reports:
            status = "pass" if r.passed else f"FAIL ({r.message})"
            out.write(f"{' '.join(map(str, r.blocks))}: {status}\n")
        if args.exhaustive is not None:
            out.write(f"{len(reports) - len(failures)}/{len(reports)} graphs pass\n")
    return 1 if failures else 0


def cmd_family(args, out: TextIO) -> int:
    if args.survey is not None:
        _dump(corollary1_survey(args.survey), out)
        return 0
    if args.theorem2:
        try:
            pair = theorem2_generate(tuple(args.theorem2))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.corollary1:
        try:
            pair = corollary1_generate(tuple(args.corollary1))
        except Corollary1Error as exc:
            if exc.diagnostic:
                sys.stderr.write(json.dumps(exc.diagnostic) + "\n")
            raise UsageError(str(exc)) from None
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError("family needs --theorem2, --corollary1 or --survey")
    if args.format == "json":
        _dump(pair.to_json(), out)
    else:
        g = " ".join(f"{i % 2}^{a}" for i, a in enumerate(pair.g))
        h = " ".join(f"{i % 2}^{a}" for i, a in enumerate(pair.h))
        out.write(f"G  = ({g})\nG' = ({h})\n")
        out.write(f"N = {pair.n_vertices}\npoly: {pair.poly.format()}\n")
        out.write(f"verified: {str(pair.verified).lower()}\n")
        out.write(f"nonisomorphic: {str(pair.nonisomorphic).lower()}\n")
    return 0 if pair.verified and pair.nonisomorphic else 1


def cmd_search(args, out: TextIO) -> int:
    result = search(args.max_vertices, workers=_workers(args), max_graphs=args.max_graphs)
    for pair in result.pairs:
        _dump(pair.to_json(), out)
    _dump({"summary": result.summary()}, out)
    return 1 if result.formula_disagreements else 0


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    if default_format not in ("text", "json"):
        default_format = "text"

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=default_format)

    parser = argparse.ArgumentParser(
        prog="threshdist",
        description="Distance characteristic polynomials of threshold graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common], help="monic distance characteristic polynomial")
    p.add_argument("sequence")
    p.add_argument("--method", choices=cp.METHODS + ("all",), default="formula")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("multiplicities", parents=[common], help="multiplicities of -2 and -1")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_multiplicities)

    p = sub.add_parser("gamma", parents=[common], help="gamma table of a block sequence")
    p.add_argument("sequence", help="creation/block sequence, or comma-separated integers")
    p.add_argument("--negate", action="store_true", help="negate the entries first")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", parents=[common], help="three-way agreement check")
    p.add_argument("sequence", nargs="?")
    p.add_argument("--exhaustive", type=int, metavar="N")
    p.add_argument("--parallelism", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", parents=[common], help="generate a cospectral pair")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--theorem2", nargs=3, type=int, metavar=("ALPHA", "BETA", "B1"))
    grp.add_argument("--corollary1", nargs=4, type=int, metavar=("I", "J", "K", "L"))
    grp.add_argument("--survey", type=int, metavar="BOUND",
                     help="JSON note comparing both corollary readings")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", parents=[common], help="exhaustive cospectral search (JSON lines)")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-graphs", type=int)
    p.add_argument("--parallelism", type=int)
    p.set_defaults(func=cmd_search)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, SequenceError) as exc:
        err.write(f"threshdist {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
