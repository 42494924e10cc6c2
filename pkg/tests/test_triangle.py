import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fusscat.triangle import (
    InexactDivisionError,
    TriangleParams,
    binomial,
    build_triangle,
    catalan_triangle,
    exact_div,
    fuss_catalan,
    row_sum,
    signed_row_sum,
    triangle_alternating,
    triangle_closed_form,
    triangle_closed_form_cell,
    triangle_convolution,
    verify_binomial_identity_e4,
)


@pytest.mark.parametrize("n,k,expected", [
    (4, 2, 6),
    (0, 0, 1),
    (-1, -1, 1),
    (3, -1, 0),
    (-2, -1, 0),
    (2, 3, 0),
    (-3, 2, 0),
    (10, -4, 0),
])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_minus_one_calibrates_p1():
    # T^1(n, 0) = 1 and T^1(n, k) = 0 for k > 0, written out directly
    t = triangle_convolution(TriangleParams(1, 12))
    for n in range(1, 13):
        assert t.rows[n] == (1,) + (0,) * n


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(InexactDivisionError):
        exact_div(13, 4)


@pytest.mark.parametrize("p,n,expected", [
    (2, 4, 14),
    (5, 4, 285),
    (5, 10, 250543370),
    (3, 3, 12),
    (3, 7, 7752),
    (4, 2, 4),
])
def test_fuss_catalan(p, n, expected):
    assert fuss_catalan(p, n) == expected


def test_fuss_catalan_p1_is_one():
    assert {fuss_catalan(1, n) for n in range(50)} == {1}


@pytest.mark.parametrize("p,n", [(0, 1), (2, -1)])
def test_fuss_catalan_rejects(p, n):
    with pytest.raises(ValueError):
        fuss_catalan(p, n)


def test_fuss_catalan_matches_rational_formula():
    for p in range(1, 8):
        for n in range(20):
            assert Fraction(math.comb(p * n + 1, n), p * n + 1) == fuss_catalan(p, n)


def test_params_validation():
    with pytest.raises(ValueError):
        TriangleParams(0, 3)
    with pytest.raises(ValueError):
        TriangleParams(2, -1)


def test_convolution_rows():
    t5 = triangle_convolution(TriangleParams(5, 4))
    assert t5.rows[3] == (1, 8, 26, 0)
    assert t5[4, 3] == 204
    assert t5.method == "convolution"
    # weights k - j + 1, hand-applied: row 2 = [1, 2, 0], row 3 = [1, 2+2, 3+4+0, 0]
    assert triangle_convolution(TriangleParams(3, 3)).rows[3] == (1, 4, 7, 0)
    assert triangle_convolution(TriangleParams(1, 4)).rows[4] == (1, 0, 0, 0, 0)


def test_alternating_rows():
    t2 = triangle_alternating(TriangleParams(2, 3))
    assert t2.rows == ((1,), (1, 0), (1, 1, 0), (1, 2, 2, 0))
    assert [row_sum(t2, n) for n in range(4)] == [1, 1, 2, 5]
    assert triangle_alternating(TriangleParams(5, 5))[5, 4] == 1771


@pytest.mark.parametrize("p,n,k,expected", [
    (2, 3, 1, 2),
    (5, 6, 5, 16380),
    (5, 10, 9, 167710664),
    (3, 0, 0, 1),
    (1, 5, 0, 1),
    (1, 5, 3, 0),
])
def test_closed_form_cell(p, n, k, expected):
    assert triangle_closed_form_cell(p, n, k) == expected


def test_closed_form_diagonal_is_zero():
    for p in range(1, 11):
        for n in range(1, 15):
            assert triangle_closed_form_cell(p, n, n) == 0


def test_closed_form_rejects_out_of_range():
    with pytest.raises(ValueError):
        triangle_closed_form_cell(3, 2, 3)


def test_row_sums():
    assert row_sum(build_triangle(5, 7), 7) == 231880
    assert row_sum(build_triangle(2, 3), 3) == 5
    t1 = build_triangle(1, 20)
    assert all(row_sum(t1, n) == 1 for n in range(21))


def test_signed_row_sums():
    t2 = build_triangle(2, 4)
    # [1, 2, 2, 0] with signs + - + -
    assert signed_row_sum(t2, 3) == 1
    assert signed_row_sum(t2, 4) == 2
    assert signed_row_sum(build_triangle(3, 3), 3) == 4
    assert signed_row_sum(build_triangle(1, 2), 2) == -1
    # row 0 gives -1 whatever p is
    assert {signed_row_sum(build_triangle(p, 0), 0) for p in range(1, 11)} == {-1}


@pytest.mark.parametrize("m,h", [(5, 0), (3, 2), (0, 0), (0, 7)])
def test_identity_examples(m, h):
    assert verify_binomial_identity_e4(m, h)


def test_identity_m3_h2_by_hand():
    # 3*C(4,2) - 3*C(3,2) + C(2,2) = 18 - 9 + 1 = C(5,2)
    assert 3 * 6 - 3 * 3 + 1 == binomial(5, 2)
    assert verify_binomial_identity_e4(3, 2)


def test_identity_exhaustive():
    assert all(verify_binomial_identity_e4(m, h) for m in range(13) for h in range(13))


def test_identity_needs_upper_negation_at_m0():
    # with every C(negative, k >= 0) read as 0 the m = 0 case cannot balance
    h = 3
    rhs = sum((-1) ** (r - 1) * binomial(h + 1, r) * binomial(h - r, h) for r in range(1, h + 2))
    assert rhs == 0 != binomial(h, h)


def test_build_triangle_unknown_method():
    with pytest.raises(ValueError):
        build_triangle(2, 3, "magic")


def test_triangle_indexing():
    t = build_triangle(3, 3)
    with pytest.raises(IndexError):
        t[2, 3]
    assert list(t.cells())[:3] == [(0, 0, 1), (1, 0, 1), (1, 1, 0)]


def test_catalan_specialization():
    t = build_triangle(2, 30)
    assert t.same_cells(catalan_triangle(30))
    for n in range(2, 31):
        for k in range(1, n):
            assert t[n, k] == t[n, k - 1] + t[n - 1, k]


@settings(max_examples=60, deadline=None)
@given(p=st.integers(1, 12), n_max=st.integers(0, 25))
def test_three_methods_agree(p, n_max):
    params = TriangleParams(p, n_max)
    conv = triangle_convolution(params)
    assert conv.same_cells(triangle_alternating(params))
    assert conv.same_cells(triangle_closed_form(params))


@settings(max_examples=60, deadline=None)
@given(p=st.integers(1, 12), n_max=st.integers(0, 25))
def test_structure_invariants(p, n_max):
    t = triangle_alternating(TriangleParams(p, n_max))
    assert t.rows[0] == (1,)
    for n, row in enumerate(t.rows):
        assert len(row) == n + 1
        assert row[0] == 1
        assert all(v >= 0 for v in row)
        if n:
            assert row[n] == 0
        assert sum(row) == fuss_catalan(p, n)


@settings(max_examples=200, deadline=None)
@given(p=st.integers(1, 15), n=st.integers(0, 120), data=st.data())
def test_closed_form_never_inexact(p, n, data):
    k = data.draw(st.integers(0, n))
    assert triangle_closed_form_cell(p, n, k) >= 0
