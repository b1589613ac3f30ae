from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gessel_walks.errors import PreconditionViolation
from gessel_walks.exact_math import binomial, catalan
from gessel_walks.identities import formulas
from gessel_walks.walk_dp import Region, shared_table

F = shared_table(Region.QUARTER, 64).get
G = shared_table(Region.HALF, 64).get


def test_gessel_closed_form_prefix():
    assert [formulas.gessel_closed_form(n) for n in range(6)] == [1, 2, 11, 85, 782, 8004]


@pytest.mark.parametrize("n", range(13))
def test_gessel_closed_form_matches_dp(n):
    assert formulas.gessel_closed_form(n) == F(2 * n, 0, 0)


def test_gessel_closed_form_matches_sympy_rf():
    n = 7
    ref = 16**n * sympy.rf(sympy.Rational(5, 6), n) * sympy.rf(sympy.Rational(1, 2), n)
    ref /= sympy.rf(2, n) * sympy.rf(sympy.Rational(5, 3), n)
    assert formulas.gessel_closed_form(n) == ref


@pytest.mark.parametrize("n", range(1, 11))
def test_c1_formula_matches_dp(n):
    assert formulas.c1_formula(n) == F(2 * n, 0, 1)


@pytest.mark.parametrize("k", range(4))
def test_c2_formula_matches_dp(k):
    for n in range(11):
        assert formulas.c2_formula(n, k) == F(2 * n + 2 * k, 0, n)


def test_c2_k0_alternative_agrees():
    assert all(formulas.c2_formula_k0_alt(n) == formulas.c2_formula(n, 0) == catalan(n) for n in range(12))


@pytest.mark.parametrize("k", range(4))
def test_c4_formula_matches_dp(k):
    for n in range(11):
        assert formulas.c4_formula(n, k) == F(n + 2 * k, n, 0)


def test_displayed_range_only():
    with pytest.raises(PreconditionViolation):
        formulas.c2_formula(2, 4)
    with pytest.raises(PreconditionViolation):
        formulas.c4_formula(2, 4)
    with pytest.raises(PreconditionViolation):
        formulas.c1_formula(0)


def test_boundary_formulas_cover_both_lines():
    for m in range(13):
        for n1 in range(m + 1):
            for n2 in range(m + 1):
                on_east = m == n1 and n1 >= n2
                on_west = m == 2 * n2 - n1 and n1 <= n2
                if on_east or on_west:
                    assert formulas.boundary_formulas(m, n1, n2) == F(m, n1, n2)
                else:
                    with pytest.raises(PreconditionViolation):
                        formulas.boundary_formulas(m, n1, n2)


@given(st.integers(0, 30), st.integers(-30, 30), st.integers(0, 30))
def test_half_plane_formula_matches_dp(m, n1, n2):
    if (m - n1) % 2 or abs(n1) > m:
        with pytest.raises(PreconditionViolation):
            formulas.half_plane_formula(m, n1, n2)
    else:
        assert formulas.half_plane_formula(m, n1, n2) == G(m, n1, n2)


def test_fk_edges():
    assert formulas.fk_edge_formulas(1) == (1, 1, 1)
    assert [formulas.fk_edge_formulas(n)[1] for n in range(1, 7)] == [1, 7, 38, 187, 874, 3958]


def test_split_formulas():
    assert [formulas.p1_as_printed(n) for n in range(1, 6)] == [2, 12, 100, 980, 10584]
    assert [formulas.p1_catalan_squared(n) for n in range(1, 6)] == [1, 4, 25, 196, 1764]
    assert [formulas.p2_watermelon(n) for n in range(1, 6)] == [1, 3, 14, 84, 594]
    assert all(formulas.p1_as_printed(n) == catalan(n) * binomial(2 * n, n) for n in range(10))


def test_diagonal_step_ratio_generates_wedge_totals():
    a = [1]
    for j in range(1, 8):
        a.append(a[-1] * formulas.diagonal_step_ratio(j))
    assert a == [1, 2, 7, 21, 78, 260, 988, 3458]
    assert formulas.diagonal_step_ratio(2) == Fraction(14, 4)
