"""
Brute-force lattice path counter.

Counts monotone paths (unit east and north steps) from ``(0, 0)`` to
``((p-1)n - 1, k)`` that keep every visited point on one side of the line
``x = (p-1)y``. Which side, and whether the line itself is allowed, was
fixed by ``calibrate`` against the product formula: the only convention
that matches is ``x >= (p-1)y`` checked at every point, endpoints included
(see ``PATH_CONSTRAINT``).

Nothing here imports the triangle constructions; the counts come from a
dynamic program over lattice points only.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable, Iterable

__all__ = [
    "CONVENTIONS",
    "ENDPOINT_MODES",
    "PATH_CONSTRAINT",
    "PathCountQuery",
    "calibrate",
    "count_constrained_paths",
    "count_paths",
]

# relation between x and (p-1)*y that every checked point must satisfy
CONVENTIONS: dict[str, Callable[[int, int], bool]] = {
    "x < (p-1)y": operator.lt,
    "x <= (p-1)y": operator.le,
    "x > (p-1)y": operator.gt,
    "x >= (p-1)y": operator.ge,
}

# which points on the path the relation is checked at
ENDPOINT_MODES = ("all", "interior", "skip-start", "skip-end")

PATH_CONSTRAINT = ("x >= (p-1)y", "all")


@dataclass(frozen=True)
class PathCountQuery:
    p: int
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(
                f"p must be >= 2 for path counting (got {self.p}); "
                "the p = 1 target and line are degenerate"
            )
        if self.n < 1 or not 0 <= self.k <= self.n:
            raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def target(self) -> tuple[int, int]:
        return ((self.p - 1) * self.n - 1, self.k)


def count_paths(
    q: PathCountQuery,
    convention: str = PATH_CONSTRAINT[0],
    endpoints: str = PATH_CONSTRAINT[1],
) -> int:
    """Count constrained paths to ``q.target`` under an explicit convention."""
    rel = CONVENTIONS[convention]
    if endpoints not in ENDPOINT_MODES:
        raise ValueError(f"unknown endpoint mode {endpoints!r}")
    slope = q.p - 1
    tx, ty = q.target
    check_start = endpoints in ("all", "skip-end")
    check_end = endpoints in ("all", "skip-start")

    def allowed(x: int, y: int) -> bool:
        if (x, y) == (0, 0) and not check_start:
            return True
        if (x, y) == (tx, ty) and not check_end:
            return True
        return rel(x, slope * y)

    # ways[y][x]; rows filled bottom-up, columns left to right
    ways = [[0] * (tx + 1) for _ in range(ty + 1)]
    for y in range(ty + 1):
        for x in range(tx + 1):
            if not allowed(x, y):
                continue
            if x == 0 and y == 0:
                ways[y][x] = 1
                continue
            west = ways[y][x - 1] if x else 0
            south = ways[y - 1][x] if y else 0
            ways[y][x] = west + south
    assert all(v >= 0 for row in ways for v in row)
    return ways[ty][tx]


def count_constrained_paths(q: PathCountQuery) -> int:
    return count_paths(q, *PATH_CONSTRAINT)


def calibrate(
    reference: Callable[[int, int, int], int],
    ps: Iterable[int] = (2, 3, 4, 5),
    n_max: int = 4,
) -> list[tuple[str, str]]:
    """Return every (convention, endpoint mode) reproducing ``reference(p, n, k)``.

    A well-posed calibration yields exactly one pair.
    """
    grid = [
        PathCountQuery(p, n, k)
        for p in ps
        for n in range(1, n_max + 1)
        for k in range(n + 1)
    ]
    matches = []
    for convention in CONVENTIONS:
        for endpoints in ENDPOINT_MODES:
            if all(count_paths(q, convention, endpoints) == reference(q.p, q.n, q.k) for q in grid):
                matches.append((convention, endpoints))
    return matches
