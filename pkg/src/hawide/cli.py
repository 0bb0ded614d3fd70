"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 budget or cap exceeded, 4 a
verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import quiver as quiver_mod
from .classify import recognize_wide, subcategory_of, wide_closure
from .counting import BudgetExceeded, count_wide_stats, enumerate_collections
from .errors import CapExceeded, HawideError
from .field import check_characteristic, default_characteristic
from .homology import ext_oracle, hom_dim_oracle
from .reps import build_module, classify_proj_inj, ext_sequence, resolution, support
from .tuples import IncTuple, e_ext, e_hom, generate_tuples, parse_tuple
from .verify import verify_grid

EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["json", "tsv", "dot", "plain"], default=None)
    parent.add_argument("--field", type=int, default=None,
                        help="prime characteristic (default $HAWIDE_FIELD or 32003)")
    parent.add_argument("--jobs", type=_positive, default=1)
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hawide",
        description="Wide subcategories of d-cluster tilting categories of type A.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name: str, help: str, nd: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        if nd:
            p.add_argument("n", type=_positive)
            p.add_argument("d", type=_positive)
        return p

    p = cmd("vertices", "list the increasing tuples")
    p.add_argument("--module-level", action="store_true", help="use m = d-1")

    p = cmd("quiver", "print the quiver Q^{n,d} with relations")
    p.add_argument("--dot", dest="format", action="store_const", const="dot")
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.add_argument("--module-level", action="store_true", help="use m = d-1")

    p = cmd("module", "print the representation M_X")
    p.add_argument("x")

    p = cmd("hom", "dim Hom(M_X, M_Y)")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--oracle", action="store_true", help="solve linear equations instead")

    p = cmd("ext", "dim Ext^i(M_X, M_Y), i = d by default")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--oracle", action="store_true", help="use the projective resolution")
    p.add_argument("--degree", type=_positive, default=None)

    p = cmd("sequence", "the exact sequence 0 -> M_X -> ... -> M_Y -> 0")
    p.add_argument("x")
    p.add_argument("y")

    p = cmd("resolution", "the resolution of M_X by modules with first entry s")
    p.add_argument("x")
    p.add_argument("--s", type=_positive, default=1)

    p = cmd("closure", "collection of the wide subcategory generated by tuples")
    p.add_argument("xs", nargs="*")

    p = cmd("recognize", "collection of a wide subcategory given by its tuples")
    p.add_argument("xs", nargs="*")

    p = cmd("count", "the number w_{n,d} of wide subcategories")
    p.add_argument("--budget-secs", type=float, default=None)

    p = cmd("enumerate", "list all non-interlacing collections")
    p.add_argument("--cap", type=int, default=None)

    cmd("verify", "check Hom/Ext formulas and exactness exhaustively")

    p = cmd("table", "table of w_{n,d}", nd=False)
    p.add_argument("--nmax", type=_positive, required=True)
    p.add_argument("--dmax", type=_positive, required=True)
    p.add_argument("--budget-secs", type=float, default=None)
    return parser


def _tuple(text: str, n: int, m: int) -> IncTuple:
    return parse_tuple(text, n, m)


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _complex_plain(c) -> str:
    terms = [" + ".join("M_" + z.label for z in t.summands) for t in c.terms]
    return "0 -> " + " -> ".join(terms) + " -> 0"


def _module_dict(x: IncTuple, p: int) -> dict:
    rep = build_module(x, p)
    return {
        "x": list(x.entries),
        "n": x.n,
        "d": x.m,
        "support": [list(v.entries) for v in support(x)],
        "dim": rep.total_dim,
        **classify_proj_inj(x),
        "arrows": [
            {"src": list(a.source.entries), "dst": list(a.target.entries), "k": a.coord,
             "matrix": rep.maps[a].tolist()}
            for a in rep.quiver.arrows
        ],
    }


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        p = check_characteristic(args.field if args.field is not None else default_characteristic())
        return _dispatch(args, p, out)
    except (HawideError, ValueError, UsageError) as exc:
        if isinstance(exc, (BudgetExceeded, CapExceeded)):
            print(f"hawide: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"hawide: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args, p: int, out) -> int:
    c = args.command
    fmt = args.format

    if c == "table":
        return _table(args, out)

    n, d = args.n, args.d

    if c == "vertices":
        vs = generate_tuples(n, d - 1 if args.module_level else d)
        if fmt == "json":
            _emit(out, json.dumps([list(v.entries) for v in vs]))
        else:
            _emit(out, "\n".join(str(v) for v in vs))
        return 0

    if c == "quiver":
        q = quiver_mod.build_quiver(n, d - 1 if args.module_level else d)
        _emit(out, quiver_mod.to_dot(q) if fmt == "dot" else quiver_mod.to_json(q))
        return 0

    if c == "module":
        x = _tuple(args.x, n, d)
        info = _module_dict(x, p)
        if fmt == "plain":
            _emit(out, " ".join(str(IncTuple(n, d - 1, tuple(v))) for v in info["support"]))
        else:
            _emit(out, json.dumps(info))
        return 0

    if c == "hom":
        x, y = _tuple(args.x, n, d), _tuple(args.y, n, d)
        value = hom_dim_oracle(x, y, p) if args.oracle else int(e_hom(x, y))
        _emit(out, str(value))
        return 0

    if c == "ext":
        x, y = _tuple(args.x, n, d), _tuple(args.y, n, d)
        i = args.degree if args.degree is not None else d
        if i > d:
            raise UsageError(f"degree {i} exceeds d={d}")
        if args.oracle:
            value = ext_oracle(x, y, i, p)
        else:
            value = int(e_ext(y, x)) if i == d else 0
        _emit(out, str(value))
        return 0

    if c in ("sequence", "resolution"):
        x = _tuple(args.x, n, d)
        if c == "sequence":
            cx = ext_sequence(x, _tuple(args.y, n, d), p)
        else:
            cx = resolution(x, args.s, p)
        _emit(out, _complex_plain(cx) if fmt == "plain" else json.dumps(cx.to_dict()))
        return 0

    if c in ("closure", "recognize"):
        xs = [_tuple(t, n, d) for t in args.xs]
        coll = wide_closure(xs, n, d) if c == "closure" else recognize_wide(xs, n, d)
        if fmt == "json":
            _emit(out, json.dumps(None if coll is None else coll.to_list()))
        elif fmt == "tsv" and coll is not None:
            _emit(out, "\n".join(str(x) for x in subcategory_of(coll)))
        else:
            _emit(out, "not wide" if coll is None else str(coll))
        return 0

    if c == "count":
        res = count_wide_stats(n, d, budget_secs=args.budget_secs, jobs=args.jobs)
        _emit(out, json.dumps(res.to_dict()) if fmt == "json" else str(res.w))
        return 0

    if c == "enumerate":
        lines = []
        for coll in enumerate_collections(n, d, cap=args.cap):
            lines.append(json.dumps(coll.to_list()) if fmt == "json" else str(coll))
        _emit(out, "\n".join(lines))
        return 0

    if c == "verify":
        rep = verify_grid(n, d, p, jobs=args.jobs)
        _emit(out, json.dumps(rep.to_dict()) if fmt == "json" else "\n".join(rep.summary_lines()))
        return 0 if rep.ok else EXIT_MISMATCH

    raise UsageError(f"unknown command {c}")  # pragma: no cover


def _table(args, out) -> int:
    header = ["d"] + [f"w_{n},d" for n in range(1, args.nmax + 1)]
    rows = ["\t".join(header)]
    for d in range(1, args.dmax + 1):
        cells = [str(d)]
        timed_out = False
        for n in range(1, args.nmax + 1):
            # w grows with n, so a row stays blank after its first timeout
            if timed_out:
                cells.append("")
                continue
            try:
                cells.append(str(count_wide_stats(n, d, budget_secs=args.budget_secs,
                                                  jobs=args.jobs).w))
            except BudgetExceeded:
                cells.append("")
                timed_out = True
        rows.append("\t".join(cells))
    _emit(out, "\n".join(rows))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
