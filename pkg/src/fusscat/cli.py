"""
Command-line interface.

Usage:
    fusscat triangle --p 5 --n-max 10             # aligned table with sums
    fusscat triangle --p 3 --n-max 3 --format csv
    fusscat verify --scope all
    fusscat enumerate --family double-partitions --n 3
    fusscat bench --p 10 --n-max 500 --repetitions 3

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 verification failure or method disagreement, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time

from . import partitions, verify
from .formats import render_table, triangle_to_csv, triangle_to_json
from .triangle import METHODS, build_triangle

__all__ = ["main"]

FORMATS = ("table", "csv", "json")

# largest n accepted by `enumerate`, per family
ENUMERATE_LIMITS = {
    "matchings": 10,
    "partitions": 12,
    "double-partitions": 9,
    "matching-doubles": 7,
}


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_triangle(args: argparse.Namespace, out) -> int:
    t = build_triangle(args.p, args.n_max, args.method)
    render = {"table": render_table, "csv": triangle_to_csv, "json": lambda t: triangle_to_json(t) + "\n"}
    out.write(render[args.format](t))
    return 0


def cmd_verify(args: argparse.Namespace, out, parser: argparse.ArgumentParser) -> int:
    if args.scope != "all" and args.n_max is not None:
        limit = verify.LIMITS.get(args.scope)
        if limit is not None and args.n_max > limit:
            parser.error(f"--n-max for scope {args.scope} must be <= {limit}")
    if args.scope == "all" and args.n_max is not None:
        for scope, limit in verify.LIMITS.items():
            if args.n_max > limit:
                print(f"note: scope {scope} capped at n_max={limit}", file=sys.stderr)
    failed = 0
    for result in verify.run_scope(args.scope, args.p_max, args.n_max):
        out.write(f"{'PASS' if result.ok else 'FAIL'}  {result.name}\n")
        if not result.ok:
            failed += 1
            print(f"counterexample for {result.name!r}: {result.detail}", file=sys.stderr)
    out.flush()
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return 1
    return 0


def cmd_enumerate(args: argparse.Namespace, out, parser: argparse.ArgumentParser) -> int:
    limit = ENUMERATE_LIMITS[args.family]
    if args.n > limit:
        parser.error(f"--n for family {args.family} must be <= {limit} (got {args.n})")
    objects = partitions.enumerate_family(args.family, args.n)
    single = args.family in ("matchings", "partitions")
    rows = [(str(d.p1) if single else str(d), d.box_count if d.n else 0) for d in objects]
    hist: dict[int, int] = {}
    for _, boxes in rows:
        hist[boxes] = hist.get(boxes, 0) + 1
    hist = dict(sorted(hist.items()))

    if args.format == "json":
        doc = {
            "family": args.family,
            "n": str(args.n),
            "objects": [{"object": o, "boxes": str(b)} for o, b in rows],
            "histogram": {str(b): str(c) for b, c in hist.items()},
        }
        out.write(json.dumps(doc, indent=1) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["object", "boxes"])
        w.writerows(rows)
        w.writerow(["histogram", ";".join(f"{b}:{c}" for b, c in hist.items())])
    else:
        width = max((len(o) for o, _ in rows), default=0)
        for o, b in rows:
            out.write(f"{o.ljust(width)}  {b}\n")
        out.write("histogram {" + ", ".join(f"{b}: {c}" for b, c in hist.items()) + "}\n")
    return 0


def cmd_bench(args: argparse.Namespace, out) -> int:
    timings: dict[str, list[float]] = {m: [] for m in METHODS}
    results = {}
    for _ in range(args.repetitions):
        for method in METHODS:
            start = time.perf_counter()
            t = build_triangle(args.p, args.n_max, method)
            timings[method].append(time.perf_counter() - start)
            results[method] = t
    reference = results[METHODS[0]]
    for method in METHODS[1:]:
        if not results[method].same_cells(reference):
            bad = next((n, k) for n, k, v in reference.cells() if results[method][n, k] != v)
            print(f"methods disagree: {method} vs {METHODS[0]} at cell {bad}; not timing",
                  file=sys.stderr)
            return 1
    medians = {m: statistics.median(ts) for m, ts in timings.items()}
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["method", "p", "n_max", "repetitions", "median_seconds"])
        for m, sec in medians.items():
            w.writerow([m, args.p, args.n_max, args.repetitions, f"{sec:.6f}"])
        out.write(buf.getvalue())
    elif args.format == "json":
        doc = {
            "p": str(args.p),
            "n_max": str(args.n_max),
            "repetitions": str(args.repetitions),
            "median_seconds": {m: f"{sec:.6f}" for m, sec in medians.items()},
        }
        out.write(json.dumps(doc, indent=1) + "\n")
    else:
        out.write(f"p={args.p} n_max={args.n_max} repetitions={args.repetitions} (outputs agree)\n")
        for m, sec in medians.items():
            out.write(f"  {m:<12} {sec:10.6f} s\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusscat", description="Exact Fuss-Catalan triangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="print T^p(n, k) for n <= n-max")
    tri.add_argument("--p", type=_positive, required=True)
    tri.add_argument("--n-max", type=_non_negative, required=True)
    tri.add_argument("--method", choices=METHODS, default="convolution")
    tri.add_argument("--format", choices=FORMATS, default="table")

    ver = sub.add_parser("verify", help="run property checks")
    ver.add_argument("--scope", choices=verify.SCOPES, default="all")
    ver.add_argument("--p-max", type=_positive, default=10)
    ver.add_argument("--n-max", type=_non_negative, default=None,
                     help="defaults: triangles 30, paths 6, partitions 5")

    enu = sub.add_parser("enumerate", help="list a family of diagrams with box counts")
    enu.add_argument("--family", choices=partitions.FAMILIES, required=True)
    enu.add_argument("--n", type=_non_negative, required=True)
    enu.add_argument("--format", choices=FORMATS, default="table")

    ben = sub.add_parser("bench", help="time the three constructions")
    ben.add_argument("--p", type=_positive, required=True)
    ben.add_argument("--n-max", type=_non_negative, required=True)
    ben.add_argument("--repetitions", type=_positive, default=1)
    ben.add_argument("--format", choices=FORMATS, default="table")

    for sp in (tri, ver, enu, ben):
        sp.set_defaults(subparser=sp)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    sub = args.subparser
    if args.command == "triangle":
        return cmd_triangle(args, out)
    if args.command == "verify":
        return cmd_verify(args, out, sub)
    if args.command == "enumerate":
        return cmd_enumerate(args, out, sub)
    return cmd_bench(args, out)


if __name__ == "__main__":
    sys.exit(main())
