"""
Noncrossing partitions, matchings and refinement pairs, with box counting.

Everything is generated by brute force in restricted-growth-string order:
units (points, or the blocks of a finer partition) are taken in order of
their smallest element and assigned to an existing group or a new one, and
any assignment that makes two groups cross is pruned. Crossing can only
get worse as groups grow, so pruning loses nothing.

Boxes are counted by the outermost-span rule: a block of the coarser
partition is a box unless its span ``[min, max]`` sits strictly inside the
span of another block. Arcs and ties under a spanning block enclose every
point between its ends, so nested material joins the enclosing box.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .triangle import binomial

__all__ = [
    "FAMILIES",
    "DoublePartition",
    "NoncrossingPartition",
    "box_count",
    "box_distribution",
    "crosses",
    "enumerate_double_partitions",
    "enumerate_family",
    "enumerate_matching_double_partitions",
    "enumerate_noncrossing_matchings",
    "enumerate_noncrossing_partitions",
    "f_table",
    "verify_f_recurrence",
]

Block = tuple[int, ...]

FAMILIES = ("matchings", "partitions", "double-partitions", "matching-doubles")


def crosses(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if blocks ``a`` and ``b`` interleave as ``x < y < z < w``.

    Label the merged, sorted points by block and count runs: two runs or
    ``a b a`` (nesting) are fine, four or more runs contain ``a b a b``.
    """
    merged = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    runs = 1
    for (_, s), (_, t) in zip(merged, merged[1:]):
        if s != t:
            runs += 1
            if runs >= 4:
                return True
    return False


def _canonical(blocks: Sequence[Sequence[int]]) -> tuple[Block, ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@dataclass(frozen=True, order=True)
class NoncrossingPartition:
    """A noncrossing partition of ``{1..n}``; blocks sorted by smallest element."""

    n: int
    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[Sequence[int]]) -> NoncrossingPartition:
        canon = _canonical(blocks)
        points = sorted(x for b in canon for x in b)
        if points != list(range(1, n + 1)):
            raise ValueError(f"blocks {blocks!r} do not partition 1..{n}")
        for i, a in enumerate(canon):
            for b in canon[i + 1:]:
                if crosses(a, b):
                    raise ValueError(f"blocks {a} and {b} cross")
        return cls(n, canon)

    @classmethod
    def singletons(cls, n: int) -> NoncrossingPartition:
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Standard arcs: consecutive elements of each block only."""
        return tuple(sorted((b[i], b[i + 1]) for b in self.blocks for i in range(len(b) - 1)))

    @property
    def is_matching(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def refines(self, other: NoncrossingPartition) -> bool:
        owner = {x: i for i, b in enumerate(other.blocks) for x in b}
        return self.n == other.n and all(len({owner[x] for x in b}) == 1 for b in self.blocks)

    def __str__(self) -> str:
        if not self.blocks:
            return "{}"
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def _group_noncrossing(units: Sequence[Block]) -> Iterator[tuple[Block, ...]]:
    """All noncrossing unions of ``units`` (pre-sorted by min), in RGS order."""
    groups: list[list[int]] = []

    def extend(i: int) -> Iterator[tuple[Block, ...]]:
        if i == len(units):
            yield tuple(tuple(sorted(g)) for g in groups)
            return
        unit = units[i]
        for g in groups:
            trial = g + list(unit)
            if any(h is not g and crosses(trial, h) for h in groups):
                continue
            saved = len(g)
            g.extend(unit)
            yield from extend(i + 1)
            del g[saved:]
        # a fresh group starting at unit's min can still cross an open group
        if not any(crosses(unit, h) for h in groups):
            groups.append(list(unit))
            yield from extend(i + 1)
            groups.pop()

    yield from extend(0)


def enumerate_noncrossing_partitions(n: int) -> list[NoncrossingPartition]:
    if n < 0:
        raise ValueError("n must be non-negative")
    units = [(i,) for i in range(1, n + 1)]
    return [NoncrossingPartition(n, _canonical(g)) for g in _group_noncrossing(units)]


def enumerate_noncrossing_matchings(n: int) -> list[NoncrossingPartition]:
    """Noncrossing perfect matchings of ``{1..2n}`` (``n`` arcs)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    matchings = _matchings_of(list(range(1, 2 * n + 1)))
    return sorted(NoncrossingPartition(2 * n, _canonical(m)) for m in matchings)


def _matchings_of(points: list[int]) -> list[list[Block]]:
    # the partner of the first point must enclose an even number of points
    if not points:
        return [[]]
    first = points[0]
    result = []
    for idx in range(1, len(points), 2):
        for inner in _matchings_of(points[1:idx]):
            for outer in _matchings_of(points[idx + 1:]):
                result.append([(first, points[idx])] + inner + outer)
    return result


def _coarsenings(p1: NoncrossingPartition) -> Iterator[NoncrossingPartition]:
    for groups in _group_noncrossing(p1.blocks):
        yield NoncrossingPartition(p1.n, _canonical(groups))


@dataclass(frozen=True)
class DoublePartition:
    """A pair ``(p1, p2)`` of noncrossing partitions with ``p1`` refining ``p2``."""

    p1: NoncrossingPartition
    p2: NoncrossingPartition

    def __post_init__(self) -> None:
        if not self.p1.refines(self.p2):
            raise ValueError(f"{self.p1} does not refine {self.p2}")

    @property
    def n(self) -> int:
        return self.p1.n

    @cached_property
    def box_count(self) -> int:
        return box_count(self)

    def ties(self) -> tuple[tuple[int, int], ...]:
        """Ties for display only: box counting never looks at them.

        Inside each block of ``p2`` the ``p1`` blocks are ordered by smallest
        element and consecutive ones are joined at their closest endpoints.
        """
        out = []
        for big in self.p2.blocks:
            parts = [b for b in self.p1.blocks if b[0] in big]
            for a, b in zip(parts, parts[1:]):
                out.append(min(((x, y) if x < y else (y, x) for x in a for y in b),
                               key=lambda e: e[1] - e[0]))
        return tuple(sorted(out))

    def __str__(self) -> str:
        return f"{self.p1}|{self.p2}"


def box_count(d: DoublePartition) -> int:
    spans = [(b[0], b[-1]) for b in d.p2.blocks]
    return sum(
        1
        for lo, hi in spans
        if not any(a < lo and hi < b for a, b in spans)
    )


def enumerate_double_partitions(n: int) -> list[DoublePartition]:
    return [
        DoublePartition(p1, p2)
        for p1 in enumerate_noncrossing_partitions(n)
        for p2 in _coarsenings(p1)
    ]


def enumerate_matching_double_partitions(n: int) -> list[DoublePartition]:
    """Pairs (M, P2): M a noncrossing matching with ``n`` arcs, P2 a noncrossing coarsening."""
    return [
        DoublePartition(m, p2)
        for m in enumerate_noncrossing_matchings(n)
        for p2 in _coarsenings(m)
    ]


def enumerate_family(family: str, n: int) -> list[DoublePartition]:
    """Objects of ``family`` as double partitions (single partitions pair with themselves)."""
    if family == "matchings":
        return [DoublePartition(m, m) for m in enumerate_noncrossing_matchings(n)]
    if family == "partitions":
        return [DoublePartition(p, p) for p in enumerate_noncrossing_partitions(n)]
    if family == "double-partitions":
        return enumerate_double_partitions(n)
    if family == "matching-doubles":
        return enumerate_matching_double_partitions(n)
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def box_distribution(n: int, family: str) -> dict[int, int]:
    """Histogram ``{boxes: count}`` over ``family`` at size ``n``, sorted by boxes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    hist = Counter(d.box_count for d in enumerate_family(family, n))
    return dict(sorted(hist.items()))


def f_table(n_max: int, zero_box_value: int = 0) -> list[list[int]]:
    """Rows ``F[n][k]`` (``n`` points, ``k`` boxes) from the box recurrence.

    ``F[n][k] = sum_{j=k-1}^{n-1} (j - k + 2) F[n-1][j]`` for ``k >= 1``,
    ``F[0][0] = 1`` and ``F[n][0] = zero_box_value`` for ``n > 0``. Only
    ``zero_box_value = 0`` agrees with enumeration: a nonempty diagram always
    has a box.
    """
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [zero_box_value]
        for k in range(1, n + 1):
            row.append(sum((j - k + 2) * prev[j] for j in range(k - 1, n)))
        rows.append(row)
    return rows


def verify_f_recurrence(n_max: int, zero_box_value: int = 0) -> bool:
    """Compare the box recurrence with brute-force histograms of double partitions.

    Also checks that ``F'(n, k) = F[n][n - k]`` satisfies the order-3
    convolution recurrence, whose weights are ``binomial(k - j + 1, 1)``.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    table = f_table(n_max, zero_box_value)
    for n in range(1, n_max + 1):
        hist = box_distribution(n, "double-partitions")
        if any(table[n][b] != hist.get(b, 0) for b in range(n + 1)):
            return False
        flipped = [table[n][n - k] for k in range(n + 1)]
        prev = [table[n - 1][n - 1 - j] for j in range(n)]
        for k in range(n):
            if flipped[k] != sum(binomial(k - j + 1, 1) * prev[j] for j in range(k + 1)):
                return False
    return True
