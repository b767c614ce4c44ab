"""Command-line front end: ``fibostirling <command> ...``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import defaultdict

from . import boards, export, stirling, verify
from .fibtiles import Tiling, fib, format_level_seq, parse_level_seq, rank, unrank, zeckendorf
from .qalgebra import QPoly, to_text

DEFAULTS = verify.Bounds()


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fibostirling", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print a triangle")
    t.add_argument("family", choices=stirling.FAMILIES)
    t.add_argument("max_n", type=_natural)
    t.add_argument("--format", choices=("text", "json", "csv"), default="text")

    r = sub.add_parser("rank", help="rank of a tiling given as a level sequence")
    r.add_argument("n", type=_natural)
    r.add_argument("seq", help='level sequence such as "(1,0,2,1)"')

    u = sub.add_parser("unrank", help="tiling of height n with rank m")
    u.add_argument("n", type=_natural)
    u.add_argument("m", type=_natural)

    z = sub.add_parser("zeck", help="Zeckendorf indices of m")
    z.add_argument("m", type=_positive)

    b = sub.add_parser("board", help="file or rook polynomials of a board")
    b.add_argument("board", help='"F(b1,...,bn)" or "B(n)"')
    b.add_argument("--kind", choices=("file", "rook"), default="file")
    b.add_argument("--barred", action="store_true")
    b.add_argument("--format", choices=("text", "json"), default="text")
    b.add_argument("--trace", action="store_true", help="dump every placement")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=verify.SUITES + ("all",))
    _bounds_args(v)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--trace", action="store_true", help="print witnesses for failures")

    e = sub.add_parser("explore", help="exploratory checks that are not claimed theorems")
    e.add_argument("topic", choices=("inverse", "unimodal"))
    _bounds_args(e)
    return p


def _bounds_args(p):
    p.add_argument("--max-n", type=_positive, default=DEFAULTS.max_n)
    p.add_argument("--max-x", type=_positive, default=DEFAULTS.max_x)
    p.add_argument("--series-order", type=_positive, default=DEFAULTS.series_order)


# ---------------------------------------------------------------------------

def render_table_text(tri: stirling.Triangle) -> str:
    lines = [f"# {tri.family}"]
    for n in range(tri.max_n + 1):
        ks = range(1, n + 1) if n else range(0, 1)
        lines.append(f"n={n}: " + " | ".join(to_text(tri(n, k)) for k in ks))
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    tri = stirling.triangle(args.family, args.max_n)
    if args.format == "json":
        out.write(export.to_json(tri))
    elif args.format == "csv":
        out.write(export.to_csv(tri))
    else:
        out.write(render_table_text(tri))
    return 0


def cmd_rank(args, out) -> int:
    try:
        t = parse_level_seq(args.seq)
        out.write(f"{rank(args.n, t)}\n")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_unrank(args, out) -> int:
    try:
        t = unrank(args.n, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(format_level_seq(t.level_seq()) + "\n")
    return 0


def cmd_zeck(args, out) -> int:
    out.write(" ".join(map(str, zeckendorf(args.m))) + "\n")
    return 0


def cmd_board(args, out) -> int:
    try:
        board = boards.parse_board(args.board)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    poly = boards.file_poly if args.kind == "file" else boards.rook_poly
    polys = [poly(board, k, args.barred) for k in range(board.n + 1)]
    if args.format == "json":
        doc = {"board": str(board), "kind": args.kind, "barred": args.barred,
               "polys": [list(p.coeffs) for p in polys]}
        out.write(json.dumps(doc) + "\n")
        return 0
    name = ("FT" if args.kind == "file" else "RT") + ("bar" if args.barred else "")
    for k, p in enumerate(polys):
        out.write(f"{name}_{k}({board}) = {to_text(p)}\n")
        if args.trace:
            enum = boards.file_placements if args.kind == "file" else boards.rook_placements
            weight = boards.file_weight if args.kind == "file" else boards.rook_weight
            for pl in enum(board, k):
                out.write(f"  placement weight=q^{weight(pl, args.barred)}\n")
                for line in boards.dump_placement(pl):
                    out.write(f"    {line}\n")
    return 0


def _plain(v):
    if isinstance(v, QPoly):
        return to_text(v)
    if isinstance(v, Tiling):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def _sort_key(r: stirling.CheckResult):
    return (r.item, [(0, v, "") if isinstance(v, int) else (1, 0, str(v)) for v in r.key])


def cmd_verify(args, out) -> int:
    bounds = verify.Bounds(args.max_n, args.max_x, args.series_order)
    results = verify.run(args.suite, bounds)
    failures = sum(r.failed for rows in results.values() for r in rows)
    if args.format == "json":
        doc = {
            "bounds": {"max_n": bounds.max_n, "max_x": bounds.max_x, "series_order": bounds.series_order},
            "suites": {
                name: [
                    {"item": r.item, "key": _plain(r.key), "status": r.status,
                     "expected": _plain(r.expected), "actual": _plain(r.actual)}
                    for r in sorted(rows, key=_sort_key)
                ]
                for name, rows in results.items()
            },
            "failures": failures,
        }
        out.write(json.dumps(doc) + "\n")
        return 1 if failures else 0

    total = inapplicable = 0
    out.write(f"{'suite':<11} {'check':<42} {'pass':>6} {'fail':>5} {'n/a':>5}\n")
    for name, rows in results.items():
        counts = defaultdict(lambda: defaultdict(int))
        for r in rows:
            counts[r.item][r.status] += 1
        for item in sorted(counts):
            c = counts[item]
            out.write(f"{name:<11} {item:<42} {c['pass']:>6} {c['fail']:>5} {c['inapplicable']:>5}\n")
        total += len(rows)
        inapplicable += sum(r.status == stirling.INAPPLICABLE for r in rows)
        if args.trace:
            for r in sorted((r for r in rows if r.failed), key=_sort_key):
                out.write(f"  FAIL {r.item} {_plain(r.key)}\n")
                out.write(f"    expected: {_plain(r.expected)}\n")
                out.write(f"    actual:   {_plain(r.actual)}\n")
    verdict = "FAIL" if failures else "PASS"
    out.write(f"{verdict}: {total} checks, {failures} failures, {inapplicable} inapplicable\n")
    return 1 if failures else 0


def cmd_explore(args, out) -> int:
    if args.topic == "inverse":
        for dim in range(1, args.max_n + 1):
            bar = stirling.matrix_inverse_check(dim, barred=True)
            plain = stirling.matrix_inverse_check(dim, barred=False)
            out.write(f"dim={dim} barred_inverse={bar} unbarred_inverse={plain}\n")
        return 0
    for k in (4, 5):
        for n in range(k, max(args.max_n, k) + 1):
            p = stirling.cell("SFbar", n, k)
            v = stirling.unimodality(p)
            out.write(f"SFbar[{n},{k}] unimodal={v.ok}\n")
    return 0


COMMANDS = {
    "table": cmd_table,
    "rank": cmd_rank,
    "unrank": cmd_unrank,
    "zeck": cmd_zeck,
    "board": cmd_board,
    "verify": cmd_verify,
    "explore": cmd_explore,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
