"""
Property checks grouped by scope, as run by ``fusscat verify``.

Each check returns a ``CheckResult``; on failure ``detail`` carries the
first counterexample found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import lattice, partitions, sequences
from .triangle import (
    build_triangle,
    catalan_triangle,
    fuss_catalan,
    row_sum,
    triangle_closed_form_cell,
    verify_binomial_identity_e4,
)

__all__ = ["CheckResult", "LIMITS", "SCOPES", "run_scope"]

SCOPES = ("all", "triangles", "paths", "partitions", "sequences")

DEFAULT_N_MAX = {"triangles": 30, "paths": 6, "partitions": 5}
# largest n_max accepted per scope
LIMITS = {"triangles": 2000, "paths": 40, "partitions": 7}


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


Check = Callable[[], CheckResult]


def _first(name: str, failures: Iterator[str]) -> CheckResult:
    first = next(failures, None)
    return CheckResult(name, first is None, first or "")


def triangle_checks(p_max: int, n_max: int) -> list[Check]:
    def equivalence(p: int) -> CheckResult:
        conv = build_triangle(p, n_max, "convolution")
        alt = build_triangle(p, n_max, "alternating")
        closed = build_triangle(p, n_max, "closed-form")

        def bad() -> Iterator[str]:
            for n, k, v in conv.cells():
                if not v == alt[n, k] == closed[n, k]:
                    yield f"T({n},{k}): convolution={v} alternating={alt[n, k]} closed-form={closed[n, k]}"
                if v < 0:
                    yield f"T({n},{k}) = {v} is negative"
            for n in range(n_max + 1):
                if conv[n, 0] != 1 or (n and conv[n, n] != 0):
                    yield f"boundary cells of row {n}: {conv.rows[n]}"

        return _first(f"p={p} methods agree, n <= {n_max}", bad())

    def row_sums(p: int) -> CheckResult:
        t = build_triangle(p, n_max)
        failures = (
            f"row {n}: sum {row_sum(t, n)} != A={fuss_catalan(p, n)}"
            for n in range(n_max + 1)
            if row_sum(t, n) != fuss_catalan(p, n)
        )
        return _first(f"p={p} row sums are Fuss-Catalan, n <= {n_max}", failures)

    def catalan() -> CheckResult:
        ref = catalan_triangle(n_max)
        t = build_triangle(2, n_max)
        failures = (
            f"row {n}: {t.rows[n]} != {ref.rows[n]}"
            for n in range(n_max + 1)
            if t.rows[n] != ref.rows[n]
        )
        return _first(f"p=2 equals the Catalan triangle, n <= {n_max}", failures)

    def identity() -> CheckResult:
        failures = (
            f"m={m} h={h}"
            for m in range(13)
            for h in range(13)
            if not verify_binomial_identity_e4(m, h)
        )
        return _first("binomial identity, 0 <= m, h <= 12", failures)

    checks: list[Check] = []
    for p in range(1, p_max + 1):
        checks += [lambda p=p: equivalence(p), lambda p=p: row_sums(p)]
    if p_max >= 2:
        checks.append(catalan)
    checks.append(identity)
    return checks


def path_checks(n_max: int) -> list[Check]:
    def calibration() -> CheckResult:
        found = lattice.calibrate(triangle_closed_form_cell)
        relations = {conv for conv, _ in found}
        ok = relations == {lattice.PATH_CONSTRAINT[0]} and lattice.PATH_CONSTRAINT in found
        return CheckResult("path convention calibration", ok, "" if ok else f"matches: {found}")

    def oracle(p: int) -> CheckResult:
        failures = (
            f"p={p} n={n} k={k}: paths={c} closed-form={f}"
            for n in range(1, n_max + 1)
            for k in range(n + 1)
            if (c := lattice.count_constrained_paths(lattice.PathCountQuery(p, n, k)))
            != (f := triangle_closed_form_cell(p, n, k))
        )
        return _first(f"p={p} lattice paths match closed form, n <= {n_max}", failures)

    return [calibration] + [lambda p=p: oracle(p) for p in (2, 3, 4, 5)]


def partition_checks(n_max: int) -> list[Check]:
    families = [
        ("partitions", partitions.enumerate_noncrossing_partitions, 2, None),
        ("matchings", partitions.enumerate_noncrossing_matchings, 2, 2),
        ("double-partitions", partitions.enumerate_double_partitions, 3, 3),
        ("matching-doubles", partitions.enumerate_matching_double_partitions, 4, 4),
    ]

    def family_check(name: str, enumerate_fn, card_p: int, box_p: int | None) -> CheckResult:
        def bad() -> Iterator[str]:
            tri = build_triangle(box_p, n_max) if box_p else None
            for n in range(n_max + 1):
                objs = enumerate_fn(n)
                if len(objs) != fuss_catalan(card_p, n):
                    yield f"n={n}: {len(objs)} objects, expected {fuss_catalan(card_p, n)}"
                if len(set(objs)) != len(objs):
                    yield f"n={n}: duplicate objects"
                if tri is not None and n >= 1:
                    hist = partitions.box_distribution(n, name)
                    expect = {b: tri[n, n - b] for b in range(1, n + 1) if tri[n, n - b]}
                    if hist != expect:
                        yield f"n={n}: box histogram {hist} != triangle {expect}"

        what = "cardinality" + (f" and boxes vs T^{box_p}" if box_p else "")
        return _first(f"{name} {what}, n <= {n_max}", bad())

    def f_recurrence() -> CheckResult:
        ok = partitions.verify_f_recurrence(max(n_max, 1))
        return CheckResult(f"box recurrence F matches enumeration, n <= {max(n_max, 1)}", ok,
                           "" if ok else "F table disagrees with box histograms")

    checks: list[Check] = [lambda f=f: family_check(*f) for f in families]
    checks.append(f_recurrence)
    return checks


def sequence_checks() -> list[Check]:
    def signed(p: int) -> CheckResult:
        bad = sequences.signed_sum_mismatches(p)
        bad += sequences.signed_sum_mismatches(p, "alternating")
        detail = "" if not bad else "n={} expected {} got {}".format(*bad[0])
        name = sequences.load_reference_data().signed_sums[p].name
        return CheckResult(f"{name}: 20 printed values", not bad, detail)

    def p5() -> CheckResult:
        bad = sequences.p5_table_mismatches()
        detail = "" if not bad else "cell ({}, {}) expected {} got {}".format(*bad[0])
        return CheckResult("p=5 printed table, n <= 10", not bad, detail)

    return [lambda p=p: signed(p) for p in range(1, 11)] + [p5]


def run_scope(scope: str, p_max: int = 10, n_max: int | None = None) -> Iterator[CheckResult]:
    """Yield results for ``scope`` in a fixed order."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    todo = SCOPES[1:] if scope == "all" else (scope,)
    for s in todo:
        n = DEFAULT_N_MAX.get(s) if n_max is None else min(n_max, LIMITS.get(s, n_max))
        if s == "triangles":
            checks = triangle_checks(p_max, n)
        elif s == "paths":
            checks = path_checks(n)
        elif s == "partitions":
            checks = partition_checks(n)
        else:
            checks = sequence_checks()
        for check in checks:
            yield check()
