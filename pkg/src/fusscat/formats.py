"""
Text, csv and json renderings of triangles.

csv and json always carry full rows and round-trip exactly through
``triangle_from_csv`` / ``triangle_from_json``. json writes every integer
as a decimal string; cells overflow 64 bits quickly.
"""

from __future__ import annotations

import csv
import io
import json

from .triangle import Triangle, TriangleParams, row_sum

__all__ = [
    "render_table",
    "triangle_from_csv",
    "triangle_from_json",
    "triangle_to_csv",
    "triangle_to_json",
]


def render_table(t: Triangle) -> str:
    """Aligned text layout: one row per ``n``, cells ``k = 0..n``, then the sum.

    Cells with ``k > n`` do not exist and are left blank.
    """
    width = t.n_max + 1
    header = ["n \\ k"] + [str(k) for k in range(width)]
    body = [
        [str(n)] + [str(v) for v in row] + [""] * (width - len(row))
        for n, row in enumerate(t.rows)
    ]
    sums = [str(row_sum(t, n)) for n in range(t.n_max + 1)]
    cols = [max(len(r[i]) for r in [header] + body) for i in range(width + 1)]
    sum_w = max(len("sum"), *(len(s) for s in sums))

    def line(cells: list[str], total: str) -> str:
        left = cells[0].rjust(cols[0])
        mid = "  ".join(c.rjust(w) for c, w in zip(cells[1:], cols[1:]))
        return f"{left} | {mid} | {total.rjust(sum_w)}".rstrip()

    rule = "-" * (cols[0] + 1) + "+" + "-" * (sum(cols[1:]) + 2 * (width - 1) + 2) + "+" + "-" * (sum_w + 1)
    out = [line(header, "sum"), rule]
    out += [line(cells, s) for cells, s in zip(body, sums)]
    return "\n".join(out) + "\n"


def triangle_to_csv(t: Triangle) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [f"k{k}" for k in range(t.n_max + 1)] + ["sum"])
    for n, row in enumerate(t.rows):
        pad = [""] * (t.n_max - n)
        w.writerow([n, *row, *pad, row_sum(t, n)])
    return buf.getvalue()


def triangle_from_csv(text: str, p: int, method: str = "csv") -> Triangle:
    """Inverse of ``triangle_to_csv``. ``p`` is not part of the csv layout."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    n_cols = len(header) - 2
    rows = []
    for fields in reader:
        n = int(fields[0])
        cells = tuple(int(x) for x in fields[1:1 + n_cols] if x != "")
        if len(cells) != n + 1 or int(fields[-1]) != sum(cells):
            raise ValueError(f"malformed csv row {fields!r}")
        rows.append(cells)
    return Triangle(TriangleParams(p, len(rows) - 1), tuple(rows), method)


def triangle_to_json(t: Triangle) -> str:
    doc = {
        "p": str(t.p),
        "n_max": str(t.n_max),
        "method": t.method,
        "rows": [[str(v) for v in row] for row in t.rows],
        "sums": [str(row_sum(t, n)) for n in range(t.n_max + 1)],
    }
    return json.dumps(doc, indent=1)


def triangle_from_json(text: str) -> Triangle:
    doc = json.loads(text)
    rows = tuple(tuple(int(v) for v in row) for row in doc["rows"])
    t = Triangle(TriangleParams(int(doc["p"]), int(doc["n_max"])), rows, doc["method"])
    if [str(sum(r)) for r in rows] != doc["sums"]:
        raise ValueError("row sums in json do not match rows")
    return t
