"""
Exact Fuss-Catalan triangles.

Three independent constructions of ``T^p(n, k)`` are provided:

 - ``triangle_convolution``: each cell from the previous row, weighted by
   ``binomial(k - j + p - 2, p - 2)``
 - ``triangle_alternating``: each cell from the cell above plus ``p - 1``
   signed, same-row neighbours on the left
 - ``triangle_closed_form``: cell-wise product formula

All arithmetic is on Python ints. Divisions go through ``exact_div`` which
raises ``InexactDivisionError`` rather than rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "METHODS",
    "InexactDivisionError",
    "Triangle",
    "TriangleParams",
    "binomial",
    "build_triangle",
    "catalan_triangle",
    "exact_div",
    "fuss_catalan",
    "row_sum",
    "signed_row_sum",
    "triangle_alternating",
    "triangle_closed_form",
    "triangle_closed_form_cell",
    "triangle_convolution",
    "verify_binomial_identity_e4",
]

METHODS = ("convolution", "alternating", "closed-form")


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder (always a bug)."""


def exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InexactDivisionError(f"{numerator} / {denominator} leaves remainder {r}")
    return q


def binomial(n: int, k: int) -> int:
    """Binomial coefficient extended to all integer pairs.

    Zero whenever ``k < 0`` or ``k > n >= 0`` or ``n < 0 <= k``, with one
    exception: ``binomial(-1, -1) == 1``. That value makes the convolution
    recurrence at ``p = 1`` (weights ``binomial(k - j - 1, -1)``) collapse to
    ``T(n, k) = T(n - 1, k)``, which is the known degenerate triangle.

    >>> binomial(4, 2), binomial(-1, -1), binomial(3, -1)
    (6, 1, 0)
    """
    if k == -1:
        return 1 if n == -1 else 0
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def fuss_catalan(p: int, n: int) -> int:
    """``binomial(p*n + 1, n) / (p*n + 1)``, the n-th Fuss-Catalan number of order p."""
    if p < 1 or n < 0:
        raise ValueError(f"need p >= 1 and n >= 0, got p={p}, n={n}")
    m = p * n + 1
    return exact_div(binomial(m, n), m)


@dataclass(frozen=True)
class TriangleParams:
    p: int
    n_max: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"p must be a positive integer, got {self.p!r}")
        if not isinstance(self.n_max, int) or self.n_max < 0:
            raise ValueError(f"n_max must be a non-negative integer, got {self.n_max!r}")


@dataclass(frozen=True)
class Triangle:
    """Rows ``0..n_max`` of ``T^p``; row ``n`` holds cells ``k = 0..n``."""

    params: TriangleParams
    rows: tuple[tuple[int, ...], ...]
    method: str

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def n_max(self) -> int:
        return self.params.n_max

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if not 0 <= k <= n <= self.n_max:
            raise IndexError(f"cell ({n}, {k}) outside triangle with n_max={self.n_max}")
        return self.rows[n][k]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield n, k, value

    def same_cells(self, other: Triangle) -> bool:
        return self.params == other.params and self.rows == other.rows


def _as_params(params: TriangleParams | Sequence[int]) -> TriangleParams:
    if isinstance(params, TriangleParams):
        return params
    return TriangleParams(*params)


def triangle_convolution(params: TriangleParams) -> Triangle:
    params = _as_params(params)
    p, n_max = params.p, params.n_max
    # weight depends only on the offset d = k - j
    weights = [binomial(d + p - 2, p - 2) for d in range(n_max + 1)]
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n):
            row.append(sum(weights[k - j] * prev[j] for j in range(k + 1)))
        row.append(0)
        rows.append(tuple(row))
    return Triangle(params, tuple(rows), "convolution")


def triangle_alternating(params: TriangleParams) -> Triangle:
    params = _as_params(params)
    p, n_max = params.p, params.n_max
    coeffs = [(-1) ** (j - 1) * binomial(p - 1, j) for j in range(1, p)]
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row: list[int] = []
        # increasing k: row[k - j] is already known, negative k reads as 0
        for k in range(n):
            value = prev[k]
            for j, c in enumerate(coeffs, start=1):
                if k - j < 0:
                    break
                value += c * row[k - j]
            row.append(value)
        row.append(0)
        rows.append(tuple(row))
    return Triangle(params, tuple(rows), "alternating")


def triangle_closed_form_cell(p: int, n: int, k: int) -> int:
    """``(p-1)(n-k) / ((p-1)n + k) * binomial((p-1)n + k, k)``.

    Where the denominator vanishes (``n = k = 0``, or ``p = 1, k = 0``) the
    value is the boundary cell ``T^p(n, 0) = 1``.
    """
    if p < 1 or not 0 <= k <= n:
        raise ValueError(f"need p >= 1 and 0 <= k <= n, got p={p}, n={n}, k={k}")
    m = (p - 1) * n + k
    if m == 0:
        return 1
    return exact_div((p - 1) * (n - k) * binomial(m, k), m)


def triangle_closed_form(params: TriangleParams) -> Triangle:
    params = _as_params(params)
    p = params.p
    rows = tuple(
        tuple(triangle_closed_form_cell(p, n, k) for k in range(n + 1))
        for n in range(params.n_max + 1)
    )
    return Triangle(params, rows, "closed-form")


_BUILDERS = {
    "convolution": triangle_convolution,
    "alternating": triangle_alternating,
    "closed-form": triangle_closed_form,
}


def build_triangle(p: int, n_max: int, method: str = "convolution") -> Triangle:
    try:
        builder = _BUILDERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}") from None
    return builder(TriangleParams(p, n_max))


def catalan_triangle(n_max: int) -> Triangle:
    """The classical Catalan triangle from ``T(n,k) = T(n,k-1) + T(n-1,k)``.

    Kept separate from the general constructions so the ``p = 2`` case has
    an independent reference.
    """
    params = TriangleParams(2, n_max)
    rows = [(1,)]
    for n in range(1, n_max + 1):
        row = [1]
        for k in range(1, n):
            row.append(row[k - 1] + rows[n - 1][k])
        row.append(0)
        rows.append(tuple(row))
    return Triangle(params, tuple(rows), "catalan")


def row_sum(t: Triangle, n: int) -> int:
    return sum(t.rows[n])


def signed_row_sum(t: Triangle, n: int) -> int:
    """Sum of row ``n`` with sign ``(-1)**(n + k + 1)`` on cell ``k``."""
    return sum(v if (n + k + 1) % 2 == 0 else -v for k, v in enumerate(t.rows[n]))


def _binomial_upper_negated(n: int, k: int) -> int:
    # C(n, k) = (-1)^k C(k - n - 1, k) for n < 0 <= k
    if k < 0:
        return 0
    if n < 0:
        return (-1) ** k * math.comb(k - n - 1, k)
    return binomial(n, k)


def verify_binomial_identity_e4(m: int, h: int) -> bool:
    """Check ``C(m+h, h) == sum_{r=1}^{h+1} (-1)^(r-1) C(h+1, r) C(m+h-r, h)``.

    This is the identity that turns the convolution recurrence into the
    alternating one (take ``h = p - 2`` and ``m = k - j``).

    At ``m = 0`` the last term is ``C(-1, h)``, which must be read as
    ``(-1)**h`` (upper negation); with ``binomial``'s zero convention for a
    negative upper index the identity would fail for every ``h``.
    """
    if m < 0 or h < 0:
        raise ValueError("m and h must be non-negative")
    lhs = _binomial_upper_negated(m + h, h)
    rhs = sum(
        (-1) ** (r - 1) * binomial(h + 1, r) * _binomial_upper_negated(m + h - r, h)
        for r in range(1, h + 2)
    )
    return lhs == rhs
