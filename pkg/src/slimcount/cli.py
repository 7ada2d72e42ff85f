"""Command-line front end: ``slimcount {count,table,build,segments,verify}``.

Exit status: 0 on success, 1 when verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import counting, oracle, verify
from .errors import SlimCountError
from .grid import build_lattice
from .lattice import is_distributive, is_semimodular, is_slim, to_dot, to_json
from .perm import (Permutation, block_canonical, head_body, inversions, is_involution,
                   is_irreducible, segments)

CACHE_ENV = "SLIMCOUNT_CACHE"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except SlimCountError as exc:
        raise UsageError(f"invalid permutation {text!r}: {exc}") from None


def cmd_count(args) -> int:
    size = args.size
    if args.kind in ("ssl", "ssd") and size < 1:
        raise UsageError(f"--n must be a positive integer for kind {args.kind}")
    if args.kind == "ssl":
        value = counting.count_ssl(size)
    elif args.kind == "ssd":
        value = counting.count_ssd(size)
    else:
        value = counting.count_distributive_diagrams(size)
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "n": size, "count": str(value)}, sort_keys=True))
    else:
        print(value)
    return EXIT_OK


def _cache_from(args) -> counting.TableCache | None:
    directory = args.cache_dir or os.environ.get(CACHE_ENV) or None
    return counting.TableCache(directory) if directory else None


def cmd_table(args) -> int:
    max_k = args.max_h * (args.max_h - 1) // 2 if args.max_k is None else args.max_k
    table = counting.build_table(args.fn, args.max_h, max_k, cache=_cache_from(args))
    if args.format == "json":
        doc = {"fn": args.fn, "max_h": args.max_h, "max_k": max_k,
               "rows": [[str(v) for v in row] for row in table.rows]}
        print(json.dumps(doc, sort_keys=True))
    else:
        out = ["h,k,value"]
        out.extend(f"{h},{k},{v}" for h, k, v in table.entries())
        print("\n".join(out))
    return EXIT_OK


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_build(args) -> int:
    pi = _perm(args.perm)
    L = build_lattice(pi)
    h, k = pi.degree, inversions(pi)
    summary = (f"h={h} inv={k} size={L.size} slim={_yn(is_slim(L))} "
               f"semimodular={_yn(is_semimodular(L))} distributive={_yn(is_distributive(L))}")
    if not args.no_summary:
        print(summary)
    print(to_dot(L) if args.out == "dot" else to_json(L), end="" if args.out == "dot" else "\n")
    return EXIT_OK


def _fmt(pi: Permutation) -> str:
    return f"({pi})" if pi.degree else "(empty)"


def cmd_segments(args) -> int:
    pi = _perm(args.perm)
    if pi.degree == 0:
        raise UsageError("segments need a permutation of degree at least 1")
    head, body = head_body(pi)
    print(f"segments: {segments(pi)}")
    print(f"head: {_fmt(head)}")
    print(f"body: {_fmt(body)}")
    print(f"irreducible: {_yn(is_irreducible(pi))}")
    print(f"involution: {_yn(is_involution(pi))}")
    print(f"inversions: {inversions(pi)}")
    print(f"block: {_fmt(block_canonical(pi).canonical)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_h > oracle.LIMITS.max_degree:
        raise UsageError(f"--max-h {args.max_h} exceeds the enumeration limit {oracle.LIMITS.max_degree}")
    if args.max_n > oracle.LIMITS.max_size:
        raise UsageError(f"--max-n {args.max_n} exceeds the size limit {oracle.LIMITS.max_size}")
    status = EXIT_OK
    for result in verify.run_all(args.max_h, args.max_n, args.deep):
        print(result.line())
        if not result.ok:
            status = EXIT_FAIL
            break
    return status


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slimcount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print N(n), the diagram count, or a Catalan number")
    p.add_argument("--kind", choices=("ssl", "ssd", "dist"), required=True)
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--n", dest="size", type=_nonneg, help="lattice size (ssl, ssd)")
    size.add_argument("--h", dest="size", type=_nonneg, help="length (dist)")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="emit one count table")
    p.add_argument("--fn", choices=counting.KINDS, required=True)
    p.add_argument("--max-h", type=_nonneg, required=True)
    p.add_argument("--max-k", type=_nonneg, default=None, help="default: h(h-1)/2 at max-h")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--cache-dir", default=None, help=f"table cache (else ${CACHE_ENV})")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("build", help="build the lattice of a permutation")
    p.add_argument("--perm", required=True, help='1-based images, e.g. "3,2,1"')
    p.add_argument("--out", choices=("dot", "json"), default="dot")
    p.add_argument("--no-summary", action="store_true", help="omit the summary line")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("segments", help="show the segment decomposition of a permutation")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_segments)

    p = sub.add_parser("verify", help="run the brute-force verification suites")
    p.add_argument("--max-h", type=_nonneg, default=6)
    p.add_argument("--max-n", type=_nonneg, default=9)
    p.add_argument("--deep", action="store_true", help="include the isomorphism suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("slimcount: warning: %(message)s"))
    logger = logging.getLogger("slimcount")
    logger.addHandler(handler)
    try:
        return args.func(args)
    except (UsageError, SlimCountError) as exc:
        print(f"slimcount: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        logger.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
