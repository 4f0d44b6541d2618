"""Command-line entry point.

Exit codes are shared by every subcommand: 0 computed (and satisfied),
1 computed but not satisfied or a hypothesis is unmet, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import bogomolov, bounds, lattice as lat_mod, walls
from .serialize import (
    InputError,
    cx_to_json,
    dumps,
    fmt,
    load_description,
    parse_int,
    parse_rational,
    reider_to_json,
    vanishing_to_json,
    walls_to_json,
)

OK, NOT_SATISFIED, INPUT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(INPUT_ERROR)


def _rational(s: str) -> Fraction:
    try:
        return parse_rational(s)
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _nonneg_rational(s: str) -> Fraction:
    x = _rational(s)
    if x < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {s}")
    return x


def _nonneg_int(s: str) -> int:
    try:
        return parse_int(s, "argument", 0)
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _pos_int(s: str) -> int:
    try:
        return parse_int(s, "argument", 1)
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _coords(s: str) -> list[Fraction]:
    return [_rational(x) for x in s.split(",")] if s.strip() else []


def _render_table(obj, out) -> None:
    """Aligned key/value rendering; lists of flat dicts become column tables."""
    def nested(v):
        return isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, dict) for x in v))

    scalars = {k: v for k, v in obj.items() if not nested(v)}
    width = max((len(k) for k in scalars), default=0)
    for k, v in scalars.items():
        print(f"{k:<{width}}  {_cell(v)}", file=out)
    for k, v in obj.items():
        if not nested(v):
            continue
        if isinstance(v, dict):
            print(f"\n[{k}]", file=out)
            _render_table(v, out)
        elif isinstance(v, list):
            print(f"\n[{k}] ({len(v)})", file=out)
            if all(isinstance(row, dict) for row in v):
                cols = list(v[0])
                cells = [[_cell(row.get(c)) for c in cols] for row in v]
                widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
                print("  ".join(c.ljust(w) for c, w in zip(cols, widths)), file=out)
                for r in cells:
                    print("  ".join(x.ljust(w) for x, w in zip(r, widths)), file=out)
            else:
                for row in v:
                    print(_cell(row), file=out)


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "(" + ", ".join(_cell(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_cell(x)}" for k, x in v.items()) + "}"
    return str(v)


def _emit(obj, args) -> None:
    if args.table:
        _render_table(obj, sys.stdout)
    else:
        print(dumps(obj))


def cmd_cx(args) -> int:
    desc = load_description(args.file)
    if desc.profile is None:
        raise InputError("surface file has no resolution_profile")
    if args.method == "continuous":
        est = bogomolov.cx_continuous(desc.profile)
    else:
        est = bogomolov.cx_integer(desc.profile, args.r_cap)
    _emit({"name": desc.name, **cx_to_json(est)}, args)
    return OK


def cmd_bound(args) -> int:
    l = args.lz + args.lt
    fp = bounds.fujita_power(args.cx, l)
    out = {
        "c_x": fmt(args.cx),
        "l": l,
        "m": fmt(bounds.m(args.cx, l)),
        "m_prime": fmt(bounds.m_prime(args.cx, l)),
        "a": fp.a,
        "partition": list(fp.report.partition),
    }
    if args.closed_form:
        out["closed_form"] = fmt(bounds.m_closed_form(args.cx, l))
    if args.compare:
        lmax = l if args.lmax is None else args.lmax
        out["disagreements"] = [
            {"c_x": fmt(d.c_x), "l": d.l, "m": fmt(d.m), "closed": fmt(d.closed)}
            for d in bounds.compare_m_forms([args.cx], lmax)
        ]
    _emit(out, args)
    return OK


def cmd_check(args) -> int:
    partition = None
    if (args.l1 is None) != (args.l2 is None):
        raise InputError("--l1 and --l2 must be given together")
    if args.l1 is not None:
        partition = (args.l1, args.l2)
    rep = bounds.check_general_vanishing(args.hsq, args.hcmin, args.cx, args.lz, args.lt, partition)
    _emit(vanishing_to_json(rep), args)
    return OK if rep.satisfied else NOT_SATISFIED


def cmd_walls(args) -> int:
    desc = load_description(args.file)
    if desc.lattice is None:
        raise InputError("surface file has no lattice")
    window = walls.SearchWindow.box(args.rmax, args.box, desc.lattice.rank)
    try:
        rep = walls.verify_lemma_hodge(desc.lattice, args.cx, args.l, window)
    except walls.HypothesisNotMet as e:
        _emit({"passed": False, "reason": str(e)}, args)
        return NOT_SATISFIED
    _emit(walls_to_json(rep), args)
    return OK if rep.passed else NOT_SATISFIED


def cmd_reider(args) -> int:
    table = bounds.reider_table(args.cx, args.lz, args.lt, args.hsq, args.denom)
    _emit(reider_to_json(table), args)
    return OK


def cmd_mumford(args) -> int:
    desc = load_description(args.file)
    lattice = desc.lattice
    if lattice is None:
        raise InputError("surface file has no lattice")
    a = _coords(args.a)
    b = _coords(args.b) if args.b is not None else a
    out = {}
    try:
        for name, c in (("a", a), ("b", b)):
            pb = lat_mod.mumford_pullback(c, lattice)
            out[name] = [fmt(x) for x in c]
            out[f"delta_{name}"] = [fmt(x) for x in pb.delta_part.coords]
        out["product"] = fmt(lat_mod.mumford_product(a, b, lattice))
    except ValueError as e:
        raise InputError(str(e)) from None
    _emit(out, args)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt_group = common.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", dest="table", action="store_false", default=False,
                           help="JSON output (default)")
    fmt_group.add_argument("--table", dest="table", action="store_true", default=False,
                           help="aligned text tables")

    p = _Parser(prog="reider", description="Exact bounds and checks for Reider-type theorems on normal surfaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("cx", parents=[common], help="estimate the Bogomolov constant C_X")
    s.add_argument("file")
    s.add_argument("--method", choices=["continuous", "integer"], default="continuous")
    s.add_argument("--r-cap", type=_pos_int, default=4)
    s.set_defaults(func=cmd_cx)

    s = sub.add_parser("bound", parents=[common], help="m, m' and the Fujita power")
    s.add_argument("--cx", type=_nonneg_rational, required=True)
    s.add_argument("--lz", type=_nonneg_int, required=True)
    s.add_argument("--lt", type=_nonneg_int, default=0)
    s.add_argument("--closed-form", action="store_true")
    s.add_argument("--compare", action="store_true")
    s.add_argument("--lmax", type=_nonneg_int)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("check", parents=[common], help="check the general vanishing hypotheses")
    s.add_argument("--hsq", type=_rational, required=True)
    s.add_argument("--hcmin", type=_rational, required=True)
    s.add_argument("--cx", type=_nonneg_rational, required=True)
    s.add_argument("--lz", type=_nonneg_int, required=True)
    s.add_argument("--lt", type=_nonneg_int, default=0)
    s.add_argument("--l1", type=_nonneg_int)
    s.add_argument("--l2", type=_nonneg_int)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("walls", parents=[common], help="enumerate candidates and verify the Hodge lemma")
    s.add_argument("file")
    s.add_argument("--cx", type=_nonneg_rational, required=True)
    s.add_argument("--l", type=_nonneg_int, required=True)
    s.add_argument("--rmax", type=_pos_int, default=3)
    s.add_argument("--box", type=_nonneg_int, default=5)
    s.set_defaults(func=cmd_walls)

    s = sub.add_parser("reider", parents=[common], help="numerical Reider divisor table")
    s.add_argument("--cx", type=_nonneg_rational, required=True)
    s.add_argument("--lz", type=_nonneg_int, required=True)
    s.add_argument("--lt", type=_nonneg_int, default=0)
    s.add_argument("--hsq", type=_rational, required=True)
    s.add_argument("--denom", type=_pos_int, default=1)
    s.set_defaults(func=cmd_reider)

    s = sub.add_parser("mumford", parents=[common], help="Mumford intersection product of two classes")
    s.add_argument("file")
    s.add_argument("--a", required=True, help="comma-separated proper-transform coordinates")
    s.add_argument("--b", help="defaults to --a")
    s.set_defaults(func=cmd_mumford)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else INPUT_ERROR
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as e:
        print(f"reider {args.command}: error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except (InputError, ValueError) as e:
        print(f"reider {args.command}: error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
