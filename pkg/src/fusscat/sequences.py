"""
Golden reference data and the checks that compare against it.

The data files under ``fusscat/data`` are transcriptions of published
values, not computed output:

``signed_sums.txt``
    header line ``p start_index values``, then one sequence per line:
    ``p``, the index of the first value, and the values, whitespace
    separated. Signed row sums of ``T^p`` for ``p = 1..10``, 20 terms each,
    starting at ``n = 1``.

``p5_triangle.txt``
    header line, then one row per line: ``n``, the printed cells
    ``T^5(n, 0), T^5(n, 1), ...`` and the row sum. Row 10 was printed without
    its trailing zero, so it carries 10 cells rather than 11.

Start index 1: with the sign ``(-1)**(n+k+1)`` row 0 contributes ``-1``
for every ``p``, yet each printed list opens with ``+1``; reading the lists
from ``n = 1`` matches all 200 values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .triangle import build_triangle, signed_row_sum

__all__ = [
    "ReferenceData",
    "SequenceTable",
    "check_p5_table",
    "check_signed_sums",
    "load_reference_data",
    "p5_table_mismatches",
    "signed_sum_mismatches",
]

# the published identifications of two of the lists
OEIS_NAMES = {2: "A000957", 3: "A121545"}


@dataclass(frozen=True)
class SequenceTable:
    name: str
    start_index: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError(f"sequence {self.name!r} is empty")

    def indexed(self) -> list[tuple[int, int]]:
        return list(enumerate(self.values, start=self.start_index))


@dataclass(frozen=True)
class ReferenceData:
    signed_sums: dict[int, SequenceTable]
    # n -> (printed cells, printed row sum)
    p5_triangle: dict[int, tuple[tuple[int, ...], int]]


def _data_lines(name: str) -> list[list[str]]:
    text = resources.files("fusscat.data").joinpath(name).read_text()
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    return lines[1:]


def parse_signed_sums(lines: list[list[str]]) -> dict[int, SequenceTable]:
    out = {}
    for fields in lines:
        p, start, *values = (int(x) for x in fields)
        name = f"signed-sums p={p}"
        if p in OEIS_NAMES:
            name += f" ({OEIS_NAMES[p]})"
        out[p] = SequenceTable(name, start, tuple(values))
    return out


@lru_cache(maxsize=None)
def load_reference_data() -> ReferenceData:
    p5 = {}
    for fields in _data_lines("p5_triangle.txt"):
        n, *cells, total = (int(x) for x in fields)
        p5[n] = (tuple(cells), total)
    return ReferenceData(parse_signed_sums(_data_lines("signed_sums.txt")), p5)


def signed_sum_mismatches(p: int, method: str = "convolution") -> list[tuple[int, int, int]]:
    """``(n, expected, actual)`` for every disagreeing signed row sum."""
    table = load_reference_data().signed_sums.get(p)
    if table is None:
        raise ValueError(f"no reference signed sums for p={p} (have 1..10)")
    last = table.start_index + len(table.values) - 1
    t = build_triangle(p, last, method)
    return [
        (n, expected, actual)
        for n, expected in table.indexed()
        if (actual := signed_row_sum(t, n)) != expected
    ]


def check_signed_sums(p: int, method: str = "convolution") -> bool:
    return not signed_sum_mismatches(p, method)


def p5_table_mismatches(method: str = "convolution") -> list[tuple[int, int | str, int, int]]:
    """``(n, k, expected, actual)`` per disagreeing cell; ``k == "sum"`` for row sums."""
    ref = load_reference_data().p5_triangle
    t = build_triangle(5, max(ref), method)
    bad: list[tuple[int, int | str, int, int]] = []
    for n, (cells, total) in sorted(ref.items()):
        for k, expected in enumerate(cells):
            if t[n, k] != expected:
                bad.append((n, k, expected, t[n, k]))
        if sum(t.rows[n]) != total:
            bad.append((n, "sum", total, sum(t.rows[n])))
    return bad


def check_p5_table(method: str = "convolution") -> bool:
    return not p5_table_mismatches(method)
