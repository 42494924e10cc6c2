from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from fusscat.partitions import (
    DoublePartition,
    NoncrossingPartition,
    box_count,
    box_distribution,
    crosses,
    enumerate_double_partitions,
    enumerate_family,
    enumerate_matching_double_partitions,
    enumerate_noncrossing_matchings,
    enumerate_noncrossing_partitions,
    f_table,
    verify_f_recurrence,
)
from fusscat.triangle import build_triangle, fuss_catalan


def all_set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def is_noncrossing(blocks):
    owner = {x: i for i, b in enumerate(blocks) for x in b}
    pts = sorted(owner)
    for a, b, c, d in combinations(pts, 4):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return False
    return True


def brute_noncrossing(n):
    return {
        tuple(sorted(tuple(sorted(b)) for b in part))
        for part in all_set_partitions(list(range(1, n + 1)))
        if is_noncrossing(part)
    }


def test_crosses():
    assert crosses((1, 3), (2, 4))
    assert not crosses((1, 4), (2, 3))
    assert not crosses((1, 2), (3, 4))
    assert crosses((1, 5, 9), (3, 7))


@pytest.mark.parametrize("n", range(0, 8))
def test_partitions_match_brute_force(n):
    got = [p.blocks for p in enumerate_noncrossing_partitions(n)]
    assert len(got) == len(set(got))
    assert set(got) == brute_noncrossing(n)


def test_partition_examples():
    assert [p.blocks for p in enumerate_noncrossing_partitions(0)] == [()]
    assert len(enumerate_noncrossing_partitions(3)) == 5
    four = {p.blocks for p in enumerate_noncrossing_partitions(4)}
    assert len(four) == 14 and ((1, 3), (2, 4)) not in four


def test_partitions_in_rgs_order():
    def rgs(p):
        label = {x: i for i, b in enumerate(p.blocks) for x in b}
        return [label[x] for x in range(1, p.n + 1)]

    seq = [rgs(p) for p in enumerate_noncrossing_partitions(6)]
    assert seq == sorted(seq)


def test_matching_examples():
    assert [m.blocks for m in enumerate_noncrossing_matchings(1)] == [((1, 2),)]
    assert [m.blocks for m in enumerate_noncrossing_matchings(2)] == [((1, 2), (3, 4)), ((1, 4), (2, 3))]
    assert len(enumerate_noncrossing_matchings(5)) == 42
    assert all(m.is_matching for m in enumerate_noncrossing_matchings(4))


def test_matchings_match_brute_force():
    for n in range(5):
        brute = {b for b in brute_noncrossing(2 * n) if all(len(x) == 2 for x in b)}
        assert {m.blocks for m in enumerate_noncrossing_matchings(n)} == brute


def test_double_partitions_match_brute_force():
    for n in range(6):
        parts = [NoncrossingPartition(n, b) for b in brute_noncrossing(n)]
        brute = {(a.blocks, b.blocks) for a in parts for b in parts if a.refines(b)}
        got = [(d.p1.blocks, d.p2.blocks) for d in enumerate_double_partitions(n)]
        assert len(got) == len(set(got))
        assert set(got) == brute


def test_double_partition_counts():
    assert len(enumerate_double_partitions(1)) == 1
    assert len(enumerate_double_partitions(3)) == 12
    assert len(enumerate_double_partitions(4)) == 55


def test_matching_double_counts():
    assert len(enumerate_matching_double_partitions(1)) == 1
    # by hand: each of the 2 matchings on [4] is coarsened by itself and by {1,2,3,4}
    assert len(enumerate_matching_double_partitions(2)) == 4 == fuss_catalan(4, 2)
    assert len(enumerate_matching_double_partitions(3)) == 22


def test_reflexive_pairs_present():
    doubles = {(d.p1, d.p2) for d in enumerate_double_partitions(5)}
    for p in enumerate_noncrossing_partitions(5):
        assert (p, p) in doubles


def test_box_count_examples():
    s = NoncrossingPartition.singletons(6)
    assert box_count(DoublePartition(s, s)) == 6
    m = NoncrossingPartition.from_blocks(4, [[1, 4], [2, 3]])
    assert box_count(DoublePartition(m, m)) == 1
    assert DoublePartition(m, m).box_count == 1


def test_box_count_bounds():
    for n in range(1, 6):
        for d in enumerate_double_partitions(n):
            assert 1 <= d.box_count <= n
            all_single = all(len(b) == 1 for b in d.p2.blocks)
            assert (d.box_count == n) == all_single


def test_standard_arcs():
    p = NoncrossingPartition.from_blocks(6, [[1, 3, 6], [2], [4, 5]])
    assert p.arcs == ((1, 3), (3, 6), (4, 5))
    assert len(p.arcs) == p.n - len(p.blocks)
    assert str(p) == "{1,3,6}{2}{4,5}"


def test_from_blocks_validation():
    with pytest.raises(ValueError):
        NoncrossingPartition.from_blocks(4, [[1, 3], [2, 4]])
    with pytest.raises(ValueError):
        NoncrossingPartition.from_blocks(4, [[1, 2], [3]])


def test_double_partition_requires_refinement():
    a = NoncrossingPartition.from_blocks(3, [[1, 2], [3]])
    b = NoncrossingPartition.from_blocks(3, [[1], [2, 3]])
    with pytest.raises(ValueError):
        DoublePartition(a, b)


def test_ties_are_presentation_only():
    p1 = NoncrossingPartition.from_blocks(6, [[1, 2], [3], [4, 5], [6]])
    p2 = NoncrossingPartition.from_blocks(6, [[1, 2, 4, 5, 6], [3]])
    d = DoublePartition(p1, p2)
    assert d.ties() == ((2, 4), (5, 6))
    assert d.box_count == 1


def test_box_distribution_examples():
    assert box_distribution(2, "matchings") == {1: 1, 2: 1}
    assert box_distribution(2, "double-partitions") == {1: 2, 2: 1}
    assert box_distribution(3, "double-partitions") == {1: 7, 2: 4, 3: 1}
    with pytest.raises(ValueError):
        box_distribution(0, "matchings")
    with pytest.raises(ValueError):
        enumerate_family("trees", 2)


@pytest.mark.parametrize("family,p,n_max", [
    ("matchings", 2, 6),
    ("double-partitions", 3, 6),
    ("matching-doubles", 4, 5),
])
def test_boxes_follow_triangle(family, p, n_max):
    t = build_triangle(p, n_max)
    for n in range(1, n_max + 1):
        hist = box_distribution(n, family)
        assert {b: hist.get(b, 0) for b in range(1, n + 1)} == {b: t[n, n - b] for b in range(1, n + 1)}


def test_empty_case_single_void_object():
    for family in ("matchings", "partitions", "double-partitions", "matching-doubles"):
        objs = enumerate_family(family, 0)
        assert len(objs) == 1 and objs[0].p1.blocks == ()


def test_f_recurrence():
    assert verify_f_recurrence(1)
    assert verify_f_recurrence(4)
    assert verify_f_recurrence(6)


def test_f_recurrence_printed_zero_box_value_fails():
    # F[n][0] = 1 for n > 0 feeds a phantom diagram into F[n+1][1]
    assert f_table(2, zero_box_value=1)[2][1] == 3
    assert box_distribution(2, "double-partitions")[1] == 2
    assert not verify_f_recurrence(3, zero_box_value=1)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 5), data=st.data())
def test_random_double_partition_refines(n, data):
    doubles = enumerate_double_partitions(n)
    d = data.draw(st.sampled_from(doubles))
    assert d.p1.refines(d.p2)
    assert all(not crosses(a, b) for a, b in combinations(d.p2.blocks, 2))
    assert all(not crosses(a, b) for a, b in combinations(d.p1.blocks, 2))
