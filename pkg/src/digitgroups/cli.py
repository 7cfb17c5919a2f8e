"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 mathematical rejection
(a failed group axiom, a rejected metacyclic spec, a non-latin partition
table).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import permutations as perms
from .ca import CaConfig, ca_evolve, load_row, max_rule, single_seed, to_wolfram_order
from .digitcore import RangeError
from .grouptools import (
    GroupSpec,
    SpecParseError,
    analyze,
    build_table,
    is_abelian,
    verify_group,
)
from .nonabelian import InvalidSpecError
from .partition import PartitionError, partition_parts
from .render import ppm, tsv

EXIT_OK, EXIT_USAGE, EXIT_REJECT = 0, 2, 3


class UsageError(Exception):
    pass


class Rejection(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _spec(text: str) -> GroupSpec:
    try:
        return GroupSpec.parse(text)
    except SpecParseError as exc:
        raise UsageError(str(exc)) from None


# -- table / check -------------------------------------------------------------

def cmd_table(args) -> int:
    spec = _spec(args.group)
    try:
        table = build_table(spec, check=not args.raw)
    except InvalidSpecError as exc:
        raise Rejection(str(exc)) from None
    if args.labels and table.labels is not None:
        cells = [[table.label(i) for i in row] for row in table.entries.tolist()]
    elif args.index:
        cells = table.entries.tolist()
    else:
        cells = table.values.tolist()

    if args.format == "tsv":
        text = tsv(cells)
    elif args.format == "ppm":
        text = ppm(table.entries.tolist(), table.order - 1)
    else:
        verdict = verify_group(table, seed=args.seed)
        text = json.dumps({
            "spec": str(spec),
            "order": table.order,
            "table": cells,
            "verified": verdict.ok,
            "verdict": str(verdict),
            "abelian": is_abelian(table),
        }) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    spec = _spec(args.group)
    try:
        table = build_table(spec, check=False)
    except InvalidSpecError as exc:
        raise Rejection(str(exc)) from None
    verdict = verify_group(table, seed=args.seed)
    lines = [f"group: {spec}", f"order: {table.order}", f"verdict: {verdict}"]
    if verdict.ok:
        report = analyze(table)
        el = table.elements
        lines += [
            f"identity: {el[report.identity]}",
            f"abelian: {str(report.abelian).lower()}",
            "orders: " + " ".join(f"{el[i]}:{o}" for i, o in enumerate(report.orders)),
            "center: " + " ".join(str(el[i]) for i in report.center),
        ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if verdict.ok else EXIT_REJECT


# -- perm ----------------------------------------------------------------------

def _subject(args, prefix: str = "") -> int:
    """Resolve a permutation given as rank, word or code to its code."""
    m = getattr(args, f"{prefix}m")
    w = getattr(args, f"{prefix}w")
    c = getattr(args, f"{prefix}c")
    given = [x is not None for x in (m, w, c)]
    if sum(given) != 1:
        flag = f"--{prefix.replace('_', '-')}" if prefix else "-"
        raise UsageError(f"give exactly one of {flag}m, {flag}w, {flag}c")
    if m is not None:
        return perms.unrank(args.p, m)
    if w is not None:
        return perms.word_to_code(args.p, perms.parse_word(w))
    perms.code_to_word(args.p, c)
    return c


def cmd_perm(args) -> int:
    p = args.p
    if args.action == "compose":
        result = perms.compose(p, _subject(args, "outer_"), _subject(args, "inner_"))
        text = perms.format_word(perms.code_to_word(p, result))
    else:
        code = _subject(args)
        if args.action == "unrank":
            text = perms.format_word(perms.code_to_word(p, code))
        elif args.action == "rank":
            text = str(perms.rank(p, code))
        elif args.action == "code":
            text = str(code)
        elif args.action == "invert":
            text = perms.format_word(perms.code_to_word(p, perms.invert(p, code)))
        else:
            text = "%+d" % perms.signature(p, code)
    _emit(text + "\n", args.out)
    return EXIT_OK


# -- ca ------------------------------------------------------------------------

def cmd_ca(args) -> int:
    rule = max_rule(args.eta, args.l, args.r) if args.rule == "max" else int(args.rule)
    if args.wolfram:
        rule = to_wolfram_order(args.eta, args.l, args.r, rule)
    cfg = CaConfig(args.eta, args.l, args.r, rule, args.width)
    if args.init == "single":
        init = single_seed(args.width)
    else:
        if not args.init_file:
            raise UsageError("--init file needs --init-file PATH")
        init = load_row(Path(args.init_file).read_text())
    rows = ca_evolve(cfg, init, args.steps)
    if args.format == "ppm":
        text = ppm([r.tolist() for r in rows], args.eta - 1)
    else:
        sep = "" if args.eta <= 10 else ","
        text = "".join(sep.join(str(v) for v in r.tolist()) + "\n" for r in rows)
    _emit(text, args.out)
    return EXIT_OK


# -- partition -----------------------------------------------------------------

def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_partition(args) -> int:
    spec = _spec(args.table)
    try:
        table = build_table(spec, check=not args.raw)
        parts = partition_parts(args.eta, table, args.x)
    except (InvalidSpecError, PartitionError) as exc:
        raise Rejection(str(exc)) from None
    total = sum(parts, Fraction(0))
    text = " ".join(_fmt(q) for q in parts) + f" | sum={_fmt(total)}\n"
    _emit(text, args.out)
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitgroups",
        description="Build, verify and export finite groups from digit-function laws.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write to this file instead of stdout")

    t = sub.add_parser("table", help="print a Cayley table")
    t.add_argument("--group", required=True,
                   help="cyclic:P | dsum:P0,P1,... | multmod:P | dihedral:Q | dicyclic:Q | "
                        "metacyclic:q=Q,a=A,c=C,r=R | sym:P | alt:P")
    t.add_argument("--format", choices=("tsv", "ppm", "json"), default="tsv")
    t.add_argument("--labels", action="store_true",
                   help="quaternion units or permutation words where defined")
    t.add_argument("--index", action="store_true",
                   help="print element indices instead of law values (permutation ranks)")
    t.add_argument("--raw", action="store_true",
                   help="skip the metacyclic axiom check and render the law as is")
    t.add_argument("--seed", type=int, default=0)
    common(t)
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("check", help="verify the group axioms and print a structure report")
    c.add_argument("--group", required=True)
    c.add_argument("--seed", type=int, default=0,
                   help="seed for sampled associativity (orders above 64)")
    common(c)
    c.set_defaults(func=cmd_check)

    pm = sub.add_parser("perm", help="rank, unrank, invert, compose and sign permutations")
    pm.add_argument("action", choices=("unrank", "rank", "code", "invert", "compose", "sign"))
    pm.add_argument("-p", type=int, required=True, help="number of symbols")
    for prefix in ("", "outer-", "inner-"):
        dest = prefix.replace("-", "_")
        flag = f"--{prefix}" if prefix else "-"
        pm.add_argument(f"{flag}m", dest=f"{dest}m", type=int, help="rank")
        pm.add_argument(f"{flag}w", dest=f"{dest}w", help="word, e.g. 2301 or 10,2,...")
        pm.add_argument(f"{flag}c", dest=f"{dest}c", type=int, help="integer code")
    common(pm)
    pm.set_defaults(func=cmd_perm)

    ca = sub.add_parser("ca", help="evolve a cellular automaton")
    ca.add_argument("--eta", type=int, default=2)
    ca.add_argument("-l", type=int, default=1, help="neighbors to the left")
    ca.add_argument("-r", type=int, default=1, help="neighbors to the right")
    ca.add_argument("--rule", default="110", help="rule number, or 'max'")
    ca.add_argument("--wolfram", action="store_true",
                   help="read --rule in Wolfram's neighborhood order (bit-reversed index)")
    ca.add_argument("--width", type=int, default=129)
    ca.add_argument("--steps", type=int, default=64)
    ca.add_argument("--init", choices=("single", "file"), default="single")
    ca.add_argument("--init-file")
    ca.add_argument("--format", choices=("text", "ppm"), default="text")
    common(ca)
    ca.set_defaults(func=cmd_ca)

    pt = sub.add_parser("partition", help="split x into exact parts via a latin square")
    pt.add_argument("--eta", type=int, default=10)
    pt.add_argument("--table", required=True, help="group spec of the latin square")
    pt.add_argument("--x", type=int, required=True)
    pt.add_argument("--raw", action="store_true")
    common(pt)
    pt.set_defaults(func=cmd_partition)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RangeError, perms.InvalidPermutationError, ValueError) as exc:
        if isinstance(exc, (InvalidSpecError, PartitionError)):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_REJECT
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Rejection as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECT


if __name__ == "__main__":
    sys.exit(main())
