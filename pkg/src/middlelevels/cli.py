"""Command-line interface.

Usage examples:
  middlelevels generate --n 3 | middlelevels verify --n 3
  middlelevels generate --n 4 --format flips
  middlelevels two-factor --n 3
  middlelevels sigma 110100
  echo 1101000 | middlelevels matching --n 3 --map M
  middlelevels six-cycles --n 4
  middlelevels aux-graph --n 4 --dot
  middlelevels stats --n 5

Exit status: 0 success, 1 verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from typing import Sequence, TextIO

from .assembly import assemble
from .dyck import is_dyck
from .errors import DomainError, ParseError, SizeLimitError
from .forest import build_aux_graph, spanning_tree
from .gadgets import enumerate_flippable_pairs, six_cycle
from .matching import MAPS, build_two_factor
from .sigma import sigma
from .verify import verify_cycle


class UsageError(Exception):
    pass


def _write_lines(out: TextIO, lines) -> None:
    for line in lines:
        out.write(line)
        out.write("\n")


def cmd_generate(args, out: TextIO, inp: TextIO) -> int:
    cycle = assemble(args.n, args.max_n_override)
    if args.format == "flips":
        _write_lines(out, map(str, cycle.flip_positions()))
    else:
        _write_lines(out, cycle.bit_lines(closed=args.closed))
    return 0


def cmd_two_factor(args, out: TextIO, inp: TextIO) -> int:
    tf = build_two_factor(args.n, args.max_n_override)
    out.write("\n\n".join("\n".join(c) for c in tf.cycles()))
    out.write("\n")
    return 0


def cmd_sigma(args, out: TextIO, inp: TextIO) -> int:
    x = args.x
    if not is_dyck(x) or not x:
        raise UsageError(f"not a non-empty Dyck word: {x!r}")
    if args.n is not None and len(x) != 2 * args.n:
        raise UsageError(f"expected a word of length {2 * args.n}, got {len(x)}")
    out.write(" ".join(map(str, sigma(x))) + "\n")
    return 0


def cmd_matching(args, out: TextIO, inp: TextIO) -> int:
    f = MAPS[args.map]
    width = 2 * args.n + 1
    results = []
    for lineno, raw in enumerate(inp, 1):
        s = raw.strip()
        if not s:
            continue
        if len(s) != width or s.strip("01"):
            raise ParseError(lineno, f"expected {width} characters of 0/1, got {s!r}")
        try:
            results.append(f(s))
        except DomainError as exc:
            raise ParseError(lineno, str(exc)) from None
    _write_lines(out, results)
    return 0


def cmd_six_cycles(args, out: TextIO, inp: TextIO) -> int:
    pairs = enumerate_flippable_pairs(args.n, args.max_n_override)
    _write_lines(out, (six_cycle(p).pattern for p in pairs))
    return 0


def cmd_aux_graph(args, out: TextIO, inp: TextIO) -> int:
    out.write(build_aux_graph(args.n, args.max_n_override).to_dot())
    return 0


def cmd_verify(args, out: TextIO, inp: TextIO) -> int:
    report = verify_cycle(inp, args.n, closed=args.closed)
    out.write(json.dumps(report.as_dict()) + "\n")
    return 0 if report.passed else 1


def cmd_stats(args, out: TextIO, inp: TextIO) -> int:
    n = args.n
    tf = build_two_factor(n, args.max_n_override)
    g = build_aux_graph(n, args.max_n_override)
    stats = {
        "n": n,
        "catalan": comb(2 * n, n) // (n + 1),
        "vertices": len(tf.vertices),
        "two_factor_cycles": len(tf.cycle_indices),
        "six_cycles": len(g.edges),
        "aux_nodes": len(g.nodes),
        "aux_edges": len(g.edges),
        "spanning_edges": len(spanning_tree(g)),
    }
    out.write(json.dumps(stats) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="middlelevels",
        description="Hamilton cycles in the middle levels graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, n_required=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--n", type=int, required=n_required)
        p.add_argument("--max-n-override", type=int, default=None)
        p.set_defaults(func=func)
        return p

    p = add("generate", cmd_generate, "print a Hamilton cycle of G_n")
    p.add_argument("--format", choices=("bits", "flips"), default="bits")
    p.add_argument("--closed", action="store_true", help="repeat the start vertex")

    add("two-factor", cmd_two_factor, "print the cycles of the 2-factor")

    p = add("sigma", cmd_sigma, "print the bitflip sequence of a Dyck word", n_required=False)
    p.add_argument("x")

    p = add("matching", cmd_matching, "map stdin vertices through M, N, Minv or Ninv")
    p.add_argument("--map", choices=tuple(MAPS), required=True)

    add("six-cycles", cmd_six_cycles, "list the gadget 6-cycle patterns")

    p = add("aux-graph", cmd_aux_graph, "print the auxiliary graph in DOT")
    p.add_argument("--dot", action="store_true", help="DOT output (the only format)")

    p = add("verify", cmd_verify, "check a cycle read from stdin")
    p.add_argument("--closed", action="store_true", help="input repeats its start vertex")

    add("stats", cmd_stats, "print summary counts as JSON")
    return parser


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    inp = sys.stdin if stdin is None else stdin
    out = sys.stdout if stdout is None else stdout
    if args.n is not None and args.n < 1:
        print(f"error: --n must be at least 1, got {args.n}", file=sys.stderr)
        return 2
    try:
        return args.func(args, out, inp)
    except (UsageError, DomainError, SizeLimitError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
