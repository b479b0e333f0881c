"""Command-line front end.

Commands: show, dist, seq, table, verify, gf.  Global flags on every
command: --format {text,json,csv}, plus command-specific bounds.  Exit
codes: 0 success, 1 verification failure, 2 usage error.  Identical
invocations produce byte-identical output (timing fields excluded from
text/csv payloads).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import bijections, closedforms, compositions, genfunc, recurrences, verifier
from .algebra import TriPoly

__all__ = ["main"]

_SEQ_NAMES = ("fib", "lucas", "d", "w0", "totcap", "signbal")

_DIST_CAP_Y = 2000
_DIST_CAP_YPQ = 300


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capdist",
        description=(
            "Exact computation and cross-verification of water-capacity "
            "statistics on compositions with parts 1 and 2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_show = sub.add_parser("show", help="statistics and bargraph of one composition")
    p_show.add_argument("composition", help="e.g. '21121' or '3,1,2'")
    _add_common(p_show)

    p_dist = sub.add_parser("dist", help="distribution polynomial for one n")
    p_dist.add_argument("n", type=int)
    p_dist.add_argument(
        "--vars",
        choices=("y", "ypq"),
        default="y",
        help="capacity only (y) or joint capacity/ones/sigma (ypq)",
    )
    _add_common(p_dist)

    p_seq = sub.add_parser("seq", help="integer sequence up to n-max")
    p_seq.add_argument("name", choices=_SEQ_NAMES)
    p_seq.add_argument("--n-max", type=int, default=20)
    _add_common(p_seq)

    p_table = sub.add_parser("table", help="count tables (triangle / tensor)")
    p_table.add_argument("stat", choices=("wnk", "bnkj"))
    p_table.add_argument("--n-max", type=int, default=16)
    _add_common(p_table)

    p_verify = sub.add_parser("verify", help="run cross-check suites")
    p_verify.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=("all",) + verifier.SUITE_NAMES,
    )
    p_verify.add_argument("--n-max", type=int, default=None, help="clamp all ranges")
    p_verify.add_argument("--threads", type=int, default=None)
    _add_common(p_verify)

    p_gf = sub.add_parser("gf", help="expand a registered generating function")
    p_gf.add_argument("model", choices=sorted(genfunc.MODELS))
    p_gf.add_argument("--n-max", type=int, default=16)
    p_gf.add_argument("--order", type=int, default=64, help="series truncation order")
    p_gf.add_argument("--k", type=int, default=None, help="capacity for gf.wk")
    _add_common(p_gf)

    return parser


def _print_csv(header: List[str], rows: List[List[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _poly_csv_rows(poly: TriPoly) -> List[List[str]]:
    return [
        [str(e[0]), str(e[1]), str(e[2]), str(c)] for e, c in poly.sorted_terms()
    ]


def _cmd_show(args) -> int:
    try:
        c = compositions.Composition.parse(args.composition)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stats = compositions.profile(c)
    graph = compositions.render_bargraph(c)
    if args.format == "json":
        payload = {
            "parts": list(c.parts),
            "n": c.n,
            "capacity": stats.capacity,
            "ones": stats.ones,
            "twos": stats.twos,
            "sigma": stats.sigma,
            "sign": stats.sign,
            "bargraph": graph.split("\n") if graph else [],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _print_csv(
            ["parts", "n", "capacity", "ones", "twos", "sigma", "sign"],
            [
                [
                    c.text(),
                    str(c.n),
                    str(stats.capacity),
                    str(stats.ones),
                    str(stats.twos),
                    "" if stats.sigma is None else str(stats.sigma),
                    str(stats.sign),
                ]
            ],
        )
    else:
        print(f"composition: {c.text() or '(empty)'}")
        print(f"n: {c.n}")
        print(f"parts: {len(c)}")
        print(f"capacity: {stats.capacity}")
        print(f"ones (tau): {stats.ones}")
        print(f"twos (mu): {stats.twos}")
        sigma = "undefined" if stats.sigma is None else stats.sigma
        print(f"sigma: {sigma}")
        print(f"sign: {'+1' if stats.sign > 0 else '-1'}")
        if graph:
            print(graph)
    return 0


def _cmd_dist(args) -> int:
    n = args.n
    if n < 0:
        print("error: n must be >= 0", file=sys.stderr)
        return 2
    cap = _DIST_CAP_Y if args.vars == "y" else _DIST_CAP_YPQ
    if n > cap:
        print(f"error: n too large for vars={args.vars} (max {cap})", file=sys.stderr)
        return 2
    if args.vars == "y":
        poly = recurrences.capacity_dist_rec3(n)[n]
    else:
        poly = recurrences.joint_dist_seq(n)[0][n]
    if args.format == "json":
        print(json.dumps({"n": n, "vars": args.vars, **poly.to_json_dict()}, indent=2))
    elif args.format == "csv":
        _print_csv(["y", "p", "q", "coef"], _poly_csv_rows(poly))
    else:
        print(poly)
    return 0


def _seq_values(name: str, n_max: int) -> List[tuple]:
    if name == "fib":
        return [(n, closedforms.fib(n)) for n in range(n_max + 1)]
    if name == "lucas":
        return [(m, closedforms.lucas(m)) for m in range(1, n_max + 1)]
    if name == "d":
        return list(enumerate(recurrences.even_interior_rec2(n_max)))
    if name == "w0":
        return [(n, closedforms.capacity_zero_count(n)) for n in range(n_max + 1)]
    if name == "totcap":
        return [(n, closedforms.total_capacity(n)) for n in range(n_max + 1)]
    if name == "signbal":
        return [(n, closedforms.sign_balance(n)) for n in range(n_max + 1)]
    raise ValueError(f"unknown sequence: {name}")


def _cmd_seq(args) -> int:
    if args.n_max < 0:
        print("error: --n-max must be >= 0", file=sys.stderr)
        return 2
    values = _seq_values(args.name, args.n_max)
    if args.format == "json":
        payload = {
            "name": args.name,
            "start": values[0][0] if values else 0,
            "values": [str(v) for _, v in values],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _print_csv(["n", "value"], [[str(n), str(v)] for n, v in values])
    else:
        print(",".join(str(v) for _, v in values))
    return 0


def _cmd_table(args) -> int:
    if args.n_max < 0:
        print("error: --n-max must be >= 0", file=sys.stderr)
        return 2
    rows = []
    if args.stat == "wnk":
        header = ["n", "k", "value"]
        for n in range(args.n_max + 1):
            rows.append([str(n), "0", str(closedforms.capacity_zero_count(n))])
            for k in range(1, n + 1):
                rows.append([str(n), str(k), str(closedforms.count_by_capacity(n, k))])
    else:
        header = ["n", "k", "j", "value"]
        for n in range(args.n_max + 1):
            for j in range(n % 2, n + 1, 2):
                for k in range(j + 1):
                    value = closedforms.count_by_capacity_ones(n, k, j)
                    rows.append([str(n), str(k), str(j), str(value)])
    if args.format == "json":
        payload = [dict(zip(header, row)) for row in rows]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _print_csv(header, rows)
    else:
        print(" ".join(header))
        for row in rows:
            print(" ".join(row))
    return 0


def _cmd_verify(args) -> int:
    bounds = verifier.Bounds().capped(args.n_max)
    if args.suite == "all":
        reports = verifier.run_all(bounds, threads=args.threads)
    else:
        reports = [verifier.run_suite(args.suite, bounds)]
    if args.format == "json":
        print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    elif args.format == "csv":
        _print_csv(
            ["suite", "pass", "checks", "failures"],
            [
                [r.suite, str(r.passed).lower(), str(r.checks), str(len(r.failures))]
                for r in reports
            ],
        )
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"[{status}] {r.suite}: {r.checks} checks, "
                  f"{len(r.failures)} failures ({r.ms} ms)")
            for failure in r.failures[:5]:
                print(f"    {failure['params']}: expected {failure['expected']}, "
                      f"got {failure['actual']}")
            if len(r.failures) > 5:
                print(f"    ... and {len(r.failures) - 5} more")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_gf(args) -> int:
    model = genfunc.MODELS[args.model]
    order = max(args.order, args.n_max)
    if args.n_max < 0:
        print("error: --n-max must be >= 0", file=sys.stderr)
        return 2
    if model.needs_k:
        if args.k is None:
            print(f"error: {model.name} requires --k", file=sys.stderr)
            return 2
        series = model.builder(args.k, order)
    else:
        series = model.builder(order)
    polys = [series.coefficient(n) for n in range(args.n_max + 1)]
    if args.format == "json":
        payload = {
            "model": model.name,
            "coeffs": [poly.to_json_dict() for poly in polys],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = []
        for n, poly in enumerate(polys):
            for row in _poly_csv_rows(poly):
                rows.append([str(n)] + row)
            if poly.is_zero():
                rows.append([str(n), "0", "0", "0", "0"])
        _print_csv(["n", "y", "p", "q", "coef"], rows)
    else:
        for n, poly in enumerate(polys):
            print(f"{n}: {poly}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "show": _cmd_show,
        "dist": _cmd_dist,
        "seq": _cmd_seq,
        "table": _cmd_table,
        "verify": _cmd_verify,
        "gf": _cmd_gf,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
