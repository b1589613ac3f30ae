from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gessel_walks.errors import DuplicateAbscissa, NonIntegerResult, SingularSystem
from gessel_walks.exact_math import (
    NewtonInterpolator,
    Polynomial,
    binomial,
    catalan,
    interpolate,
    pochhammer,
    poly_eval,
    solve_linear,
    to_count,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (5, 0, 1), (3, 5, 0), (3, -1, 0), (-2, 1, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_symmetry_and_pascal(n, k):
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)
    if n >= 1:
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_catalan_prefix():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


@pytest.mark.parametrize("a,n,expected", [(Q(1, 2), 0, 1), (Q(1, 2), 2, Q(3, 4)), (Q(5, 3), 2, Q(40, 9))])
def test_pochhammer_examples(a, n, expected):
    assert pochhammer(a, n) == expected


@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


def test_pochhammer_matches_sympy():
    for a in (Q(5, 6), Q(7, 3), Q(-1, 2)):
        for n in range(6):
            assert pochhammer(a, n) == sympy.rf(sympy.Rational(a.numerator, a.denominator), n)


def test_to_count():
    assert to_count(Q(12, 3)) == 4
    with pytest.raises(NonIntegerResult):
        to_count(Q(1, 2))


def test_polynomial_canonical_form():
    p = Polynomial((1, 0, 0))
    assert p.coeffs == (1,)
    assert p.degree() == 0
    assert Polynomial().degree() == -1
    assert Polynomial((0, 0)) == Polynomial()
    assert Polynomial((Q(2, 4),)) == Polynomial((Q(1, 2),))


def test_polynomial_arithmetic():
    x = Polynomial.x()
    p = x * x + Polynomial.constant(1)
    assert p == Polynomial((1, 0, 1))
    assert (p - p).is_zero()
    assert (x + Polynomial.constant(1)) * (x - Polynomial.constant(1)) == Polynomial((-1, 0, 1))
    assert 2 * x == Polynomial((0, 2))


def test_polynomial_primitive():
    q = Polynomial((Q(-50, 270), Q(183, 270), Q(111, 270)))
    content, prim = q.primitive()
    assert content == Q(1, 270)
    assert prim == Polynomial((-50, 183, 111))


def test_polynomial_str():
    assert str(Polynomial((Q(-5, 27), Q(61, 90), Q(37, 90)))) == "(37/90)*n^2 + (61/90)*n - 5/27"
    assert str(Polynomial()) == "0"


@pytest.mark.parametrize(
    "coeffs,x,expected",
    [((), 7, 0), ((0, 0, 1), 3, 9), ((Q(1, 2), 0, 1), Q(1, 2), Q(3, 4))],
)
def test_poly_eval_examples(coeffs, x, expected):
    assert poly_eval(Polynomial(coeffs), x) == expected


def test_interpolate_examples():
    assert interpolate([(0, 0), (1, 1), (2, 4)]) == Polynomial((0, 0, 1))
    assert interpolate([(0, 5)]) == Polynomial.constant(5)
    pts = [(0, 1), (1, 2), (2, 5), (3, 10)]
    p = interpolate(pts)
    assert p == Polynomial((1, 0, 1))
    assert all(p(x) == y for x, y in pts)


def test_interpolate_duplicate_abscissa():
    with pytest.raises(DuplicateAbscissa):
        interpolate([(1, 2), (1, 3)])


@settings(max_examples=60)
@given(st.lists(st.tuples(rationals, rationals), min_size=1, max_size=7, unique_by=lambda t: t[0]))
def test_interpolate_reproduces_points_and_matches_sympy(points):
    p = interpolate(points)
    assert all(p(x) == y for x, y in points)
    assert p.degree() < len(points)
    n = sympy.Symbol("n")
    ref = sympy.interpolating_poly(
        len(points), n,
        X=[sympy.Rational(x.numerator, x.denominator) for x, _ in points],
        Y=[sympy.Rational(y.numerator, y.denominator) for _, y in points],
    )
    ref_coeffs = sympy.Poly(sympy.expand(ref), n).all_coeffs()[::-1] if ref != 0 else []
    assert p == Polynomial(tuple(Q(int(c.p), int(c.q)) for c in ref_coeffs))


def test_newton_incremental_degree_discovery():
    interp = NewtonInterpolator()
    f = lambda x: 3 * x**3 - x + 2
    seen = []
    for x in range(8):
        interp.add(x, f(x))
        seen.append(interp.polynomial().degree())
    assert seen == [0, 1, 2, 3, 3, 3, 3, 3]


@pytest.mark.parametrize(
    "A,b,expected",
    [
        ([[1, 0], [0, 1]], [3, 4], [3, 4]),
        ([[2, 0], [0, 4]], [1, 1], [Q(1, 2), Q(1, 4)]),
        ([[1, 1], [1, -1]], [3, 1], [2, 1]),
        ([[0, 1], [1, 0]], [5, 7], [7, 5]),
    ],
)
def test_solve_linear_examples(A, b, expected):
    assert solve_linear(A, b) == expected


def test_solve_linear_singular():
    with pytest.raises(SingularSystem):
        solve_linear([[1, 2], [2, 4]], [1, 2])


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(rationals, min_size=n, max_size=n),
    )
))
def test_solve_linear_back_substitution(system):
    A, b = system
    if sympy.Matrix(A).det() == 0:
        with pytest.raises(SingularSystem):
            solve_linear(A, b)
        return
    x = solve_linear(A, b)
    assert [sum(a * v for a, v in zip(row, x)) for row in A] == b
