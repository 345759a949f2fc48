"""Command-line front end.

Exit codes: 0 success, 1 malformed input or budget exceeded, 2 a well-formed
input that fails semantic validation, 3 an internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .combinatorics import parse_rational
from .correspondence import (
    InvalidSequenceError,
    alhc_of,
    betti_of,
    betti_oracle,
    enumerate_alhc,
    graph_from_alhc,
    graph_from_betti,
)
from .graphs import (
    NotSimpleGraphError,
    ThresholdGraph,
    coedge_generators,
    enumerate_graphs,
    format_generators,
    parse_edge_list,
    recognize,
)
from .random_model import ENUMERATION_LIMIT, METHODS, STATISTICS, default_workers, expectation, monte_carlo

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3
ORACLE_LIMIT = 12
ALHC_BUDGET = 1 << 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default; usage errors are malformed input here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _join(seq: Sequence[int]) -> str:
    return ";".join(map(str, seq))


def _graph_arg(args) -> ThresholdGraph:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        return ThresholdGraph(args.n, frozenset(_ints(args.sigma or "")))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_convert(args, out) -> int:
    if args.source == "graph":
        T = _graph_arg(args)
    else:
        if args.values is None:
            raise UsageError("--values is required")
        values = _ints(args.values)
        if not values:
            raise UsageError("empty sequence")
        T = graph_from_alhc(values) if args.source == "alhc" else graph_from_betti(values)
    record = {}
    if args.to in ("graph", "all"):
        record.update(T.to_dict())
    if args.to in ("betti", "all"):
        record["betti"] = list(betti_of(T))
    if args.to in ("alhc", "all"):
        record["alhc"] = list(alhc_of(T))
        if args.to == "alhc":
            record["t"] = 1
    out.write(_dump(record) + "\n")
    return EXIT_OK


def correspondence_rows(n: int) -> list[dict]:
    return [
        {"sigma": T.sorted_sigma(), "betti": list(betti_of(T)), "alhc": list(alhc_of(T))}
        for T in enumerate_graphs(n)
    ]


def render_csv(n: int, rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "sigma", "betti", "alhc"])
    for row in rows:
        writer.writerow([n, _join(row["sigma"]), _join(row["betti"]), _join(row["alhc"])])
    return buf.getvalue()


def cmd_enumerate(args, out) -> int:
    if not 1 <= args.n <= ENUMERATION_LIMIT:
        raise UsageError(f"n must lie in 1..{ENUMERATION_LIMIT}")
    rows = correspondence_rows(args.n)
    if args.format == "csv":
        out.write(render_csv(args.n, rows))
    else:
        out.write(_dump({"n": args.n, "rows": rows}) + "\n")
    return EXIT_OK


def _parse_p(text: str, method: str) -> Fraction | float:
    text = text.strip()
    if method == "mc":
        if "/" in text:
            raise UsageError("mc takes p as a decimal, e.g. 0.3")
        try:
            p = float(text)
        except ValueError:
            raise UsageError(f"bad probability {text!r}") from None
    else:
        try:
            p = parse_rational(text)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"exact methods take p as num/den, got {text!r}") from None
    if not 0 <= p <= 1:
        raise UsageError("p must lie in [0, 1]")
    return p


def cmd_expect(args, out) -> int:
    p = _parse_p(args.p, args.method)
    if args.n < 1:
        raise UsageError("n must be at least 1")
    if args.method == "enumerate" and args.n > ENUMERATION_LIMIT:
        raise UsageError("n too large for enumeration")
    if args.method == "mc":
        if args.samples is None or args.samples < 1:
            raise UsageError("mc needs --samples >= 1")
        report = monte_carlo(args.n, p, args.stat, args.samples, args.seed, workers=args.threads)
    else:
        report = expectation(args.n, p, args.stat, args.method)
    out.write(_dump(report.to_dict()) + "\n")
    return EXIT_OK


def oracle_check(max_n: int) -> tuple[int, ThresholdGraph | None]:
    """Check every graph with ``n <= max_n``; return the count and the first failure."""
    checked = 0
    for n in range(1, max_n + 1):
        for T in enumerate_graphs(n):
            checked += 1
            beta, lam = betti_of(T), alhc_of(T)
            if (
                beta != betti_oracle(T)
                or graph_from_alhc(lam) != T
                or graph_from_betti(beta) != T
            ):
                return checked, T
    return checked, None


def cmd_oracle_check(args, out) -> int:
    if not 1 <= args.max_n <= ORACLE_LIMIT:
        raise UsageError(f"max-n must lie in 1..{ORACLE_LIMIT}")
    checked, bad = oracle_check(args.max_n)
    if bad is not None:
        out.write(f"mismatch at n={bad.n} sigma={bad.sorted_sigma()} after {checked} graphs\n")
        return EXIT_INTERNAL
    out.write(f"{checked} graphs checked, 0 mismatches\n")
    return EXIT_OK


def cmd_ideal(args, out) -> int:
    T = _graph_arg(args)
    text = format_generators(coedge_generators(T), args.format)
    if text:
        out.write(text + "\n")
    return EXIT_OK


def cmd_recognize(args, out) -> int:
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    try:
        matrix = parse_edge_list(args.edges, args.m)
    except NotSimpleGraphError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    T = recognize(matrix)
    if T is None:
        raise InvalidSequenceError("not threshold")
    out.write(T.to_json() + "\n")
    return EXIT_OK


def cmd_alhc_enumerate(args, out) -> int:
    if args.n < 1 or args.t < 0:
        raise UsageError("need n >= 1 and t >= 0")
    if (args.t + 1) ** args.n > ALHC_BUDGET:
        raise UsageError("(t+1)^n exceeds the enumeration budget")
    comps = [list(c) for c in enumerate_alhc(args.n, args.t)]
    if args.format == "csv":
        out.write("alhc\n" + "".join(_join(c) + "\n" for c in comps))
    else:
        out.write(_dump({"n": args.n, "t": args.t, "count": len(comps), "alhc": comps}) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thresholdkit", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None, help="worker cap (default: all cores)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", help="translate between graph, Betti sequence and ALHC")
    p.add_argument("--from", dest="source", choices=["graph", "betti", "alhc"], required=True)
    p.add_argument("--to", choices=["graph", "betti", "alhc", "all"], default="all")
    p.add_argument("--n", type=int)
    p.add_argument("--sigma", default="")
    p.add_argument("--values")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("enumerate", help="correspondence table for all 2^n graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("expect", help="expected Betti numbers, ALHC or projective dimension of T(n,p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--stat", choices=STATISTICS, required=True)
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("oracle-check", help="cross-check the labeling formulas against brute force")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("ideal", help="generators of the coedge ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", default="")
    p.add_argument("--format", choices=["plain", "cas"], default="plain")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("recognize", help="decide whether an edge list is a threshold graph")
    p.add_argument("--edges", required=True)
    p.add_argument("--m", type=int, required=True, help="largest vertex label")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("alhc-enumerate", help="all anti-lecture hall compositions of length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_alhc_enumerate)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.threads is None:
        args.threads = default_workers()
    try:
        return args.func(args, out)
    except InvalidSequenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NotSimpleGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
