"""Command-line entry point: ``signless {check,sweep,enumerate,bounds,poly}``.

Output is JSON lines (one object per graph and k) unless noted; exit codes are
0 when everything holds, 2 when a violation was found, 1 on operational error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager

from . import graph6
from .bounds import best_applicable
from .charpoly import char_poly_q, dump_polys, infinity_prime_poly, u1_quintic
from .enumeration import DEFAULT_ENUM_N, MAX_ENUM_N, EnumerationError, connected_graphs, filter_class
from .families import FamilyError
from .graph import GraphError
from .graph6 import Graph6Error
from .verify import (CHECKS, EXIT_ERROR, EXIT_OK, EXIT_VIOLATION, check_conjecture,
                     check_tricyclic_battery, check_u1_battery, check_u2_battery, check_infprime_battery,
                     enumeration_source, family_source, graph6_source, sweep)

CLASSES = ("tree", "unicyclic", "bicyclic", "tricyclic", "other", "all")
LEMMAS = ("u1", "u2", "t23", "infprime")


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # exit status 2 means "violation found"; usage errors are operational
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _parse_k(text: str):
    if text == "all":
        return None
    try:
        ks = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"--k expects 'all' or a comma list, got {text!r}")
    if not ks or ks[0] < 1:
        raise argparse.ArgumentTypeError("k values must be >= 1")
    return ks


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _add_source(p: argparse.ArgumentParser, required: bool = True):
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--family", help='family spec, e.g. "theta(3,4,2)" or "bicyclicgrid(30)"')
    src.add_argument("--graph6", metavar="PATH", help="graph6 file, or - for standard input")
    src.add_argument("--enumerate", type=_positive, metavar="N",
                     help="all connected graphs with 1..N vertices")
    p.add_argument("--class", dest="cls", choices=CLASSES, default="all",
                   help="keep only graphs of this cyclomatic class")
    p.add_argument("--allow-large", action="store_true",
                   help=f"permit enumeration above n={DEFAULT_ENUM_N} (up to {MAX_ENUM_N})")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--k", type=_parse_k, default=None, metavar="{LIST|all}",
                   help="comma-separated k values or 'all' (default all)")
    p.add_argument("--mode", choices=("float", "certified"), default="float")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--output", metavar="PATH", help="write here instead of standard output")
    p.add_argument("--summary", action="store_true", help="print only the aggregate report")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="signless", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="conjecture verdicts and bound report per graph and k")
    _add_source(p)
    _common(p)

    p = sub.add_parser("sweep", help="aggregate checks over a graph source or a lemma battery")
    _add_source(p, required=False)
    _common(p)
    p.add_argument("--checks", choices=CHECKS + ("all",), default="conjecture")
    p.add_argument("--lemma", choices=LEMMAS, help="run a lemma battery instead of a source")
    p.add_argument("--n-min", type=_positive)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--no-timing", action="store_true",
                   help="omit wall time from the summary (byte-identical reruns)")

    p = sub.add_parser("enumerate", help="graph6 lines of connected graphs on n vertices")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--class", dest="cls", choices=CLASSES, default="all")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("bounds", help="every closed-form bound per graph and k")
    _add_source(p)
    p.add_argument("--k", type=_parse_k, default=None, metavar="{LIST|all}")
    p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("poly", help="signless Laplacian characteristic polynomials "
                                    "(coefficients low to high, one line each)")
    _add_source(p, required=False)
    p.add_argument("--lemma", choices=("u1quintic", "infprime"))
    p.add_argument("--n", type=_positive)
    p.add_argument("--a", type=int)
    p.add_argument("--output", metavar="PATH")
    return ap


@contextmanager
def _out(path):
    if path:
        with open(path, "w") as fh:
            yield fh
    else:
        yield sys.stdout


def _items(args):
    if args.family:
        items = family_source(args.family)
        desc = f"family {args.family}"
    elif args.graph6:
        items = graph6_source(args.graph6)
        desc = f"graph6 {args.graph6}"
    elif args.enumerate:
        if args.enumerate > MAX_ENUM_N or (args.enumerate > DEFAULT_ENUM_N and not args.allow_large):
            raise CliError(f"--enumerate {args.enumerate} needs --allow-large (max {MAX_ENUM_N})")
        items = enumeration_source(args.enumerate, args.cls, args.allow_large, getattr(args, "jobs", 1))
        return f"enumeration n<={args.enumerate} class={args.cls}", items
    else:
        raise CliError("one of --family, --graph6, --enumerate is required")
    if args.cls != "all":
        from .graph import graph_class
        items = ((gid, g) for gid, g in items if graph_class(g).tag == args.cls)
        desc += f" class={args.cls}"
    return desc, items


def cmd_check(args) -> int:
    desc, items = _items(args)
    status = EXIT_OK
    count = 0
    with _out(args.output) as out:
        for gid, g in items:
            count += 1
            ks = args.k or range(1, g.n + 1)
            for k, v in check_conjecture(g, args.mode, ks):
                row = best_applicable(g, k, gid).to_json()
                row.update(outcome=v.outcome, margin=v.margin)
                if v.outcome.startswith("Violated"):
                    status = EXIT_VIOLATION
                if not args.summary:
                    out.write(json.dumps(row, sort_keys=True) + "\n")
        if args.summary:
            out.write(json.dumps({"spec": desc, "graphs": count, "exit": status}) + "\n")
    if count == 0:
        raise CliError("source yielded no graphs")
    return status


def cmd_sweep(args) -> int:
    with _out(args.output) as out:
        stream = None if args.summary else out
        if args.lemma:
            if args.family or args.graph6 or args.enumerate:
                raise CliError("--lemma cannot be combined with a graph source")
            lo = args.n_min or {"u1": 5, "u2": 9, "t23": 6, "infprime": 5}[args.lemma]
            hi = args.n_max or lo + 10
            rng = range(lo, hi + 1)
            if args.lemma == "u1":
                rep = check_u1_battery(rng, args.mode, stream)
            elif args.lemma == "u2":
                rep = check_u2_battery(rng, stream)
            elif args.lemma == "t23":
                rep = check_tricyclic_battery(rng, range(max(lo, 7), hi + 1), stream)
            else:
                rep = check_infprime_battery(rng, stream)
        else:
            desc, items = _items(args)
            checks = CHECKS if args.checks == "all" else (args.checks,)
            rep = sweep(desc, items, checks, args.mode, args.k, args.jobs, stream)
        out.write(rep.dumps(timing=not args.no_timing) + "\n")
    return rep.exit_code


def cmd_enumerate(args) -> int:
    gs = filter_class(connected_graphs(args.n, args.allow_large, args.jobs), args.cls)
    with _out(args.output) as out:
        for g in gs:
            out.write(graph6.encode(g).decode() + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    desc, items = _items(args)
    with _out(args.output) as out:
        for gid, g in items:
            for k in args.k or range(1, g.n + 1):
                out.write(best_applicable(g, k, gid).dumps() + "\n")
    return EXIT_OK


def cmd_poly(args) -> int:
    if args.lemma:
        if args.n is None:
            raise CliError("--lemma needs --n")
        if args.lemma == "u1quintic":
            if args.a is None:
                raise CliError("u1quintic needs --a")
            polys = [u1_quintic(args.n, args.a)]
        else:
            polys = [infinity_prime_poly(args.n)]
    else:
        _, items = _items(args)
        polys = [char_poly_q(g) for _, g in items]
    with _out(args.output) as out:
        out.write(dump_polys(polys))
    return EXIT_OK


COMMANDS = {"check": cmd_check, "sweep": cmd_sweep, "enumerate": cmd_enumerate,
            "bounds": cmd_bounds, "poly": cmd_poly}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (CliError, FamilyError, GraphError, Graph6Error, EnumerationError,
            ValueError, OSError) as exc:
        print(f"signless {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
