from fractions import Fraction

import pytest

from gessel_walks.errors import PreconditionViolation
from gessel_walks.exact_math import Polynomial
from gessel_walks.identities import extraction
from gessel_walks.identities.formulas import c1_formula
from gessel_walks.walk_dp import Region, shared_table

TABLE = shared_table(Region.QUARTER, 64)
F = TABLE.get


@pytest.mark.parametrize("k", range(1, 5))
def test_c2_shape(k):
    f = extraction.c2_extract(k, TABLE)
    assert f.all_ok
    assert f.poly.degree() == 2 * k - 2
    assert f.poly.has_integer_coeffs()
    assert f.poly.leading == 2 ** (3 * k - 2)
    assert f.companion.degree() == 2 * k - 1
    assert f.companion(-1) == 0


def test_c2_known_polynomial():
    assert extraction.c2_extract(1, TABLE).poly == Polynomial((2,))
    assert extraction.c2_extract(2, TABLE).poly == Polynomial((66, 64, 16))


@pytest.mark.parametrize("k", range(1, 5))
def test_c4_shape(k):
    f = extraction.c4_extract(k, TABLE)
    assert f.all_ok
    assert f.poly.degree() == 2 * k - 1
    assert f.poly.has_integer_coeffs()
    assert f.poly.leading == 1
    assert f.companion(-1) == 0


def test_c4_known_polynomials():
    assert extraction.c4_extract(1, TABLE).poly == Polynomial((4, 1))
    assert extraction.c4_extract(2, TABLE).poly == Polynomial((132, 74, 15, 1))


def test_extract_rejects_k_zero():
    with pytest.raises(PreconditionViolation):
        extraction.c2_extract(0)


def test_c1_k1_recovers_closed_form():
    p, q = extraction.c1_fit(1, table=TABLE)
    assert p == Polynomial((Fraction(5, 27),))
    assert q == Polynomial((Fraction(-5, 27), Fraction(61, 90), Fraction(37, 90)))
    assert all(extraction.c1_evaluate(n, 1, p, q) == c1_formula(n) for n in range(1, 15))


def test_c1_k2_fit():
    p, q = extraction.c1_fit(2, table=TABLE)
    assert p == Polynomial((Fraction(-85, 729), Fraction(500, 5103), Fraction(355, 5103)))
    assert q.degree() <= 4


@pytest.mark.parametrize("k", [1, 2])
def test_c1_findings_validate(k):
    p, q = extraction.c1_findings(k, held_out=3, table=TABLE)
    assert p.all_ok and q.all_ok
    assert p.poly.degree() <= 2 * k - 2 and q.poly.degree() <= 2 * k


@pytest.mark.parametrize("k", [1, 2])
def test_c1_oversampled_fit_agrees(k):
    unknowns = extraction.c1_unknowns(k)
    assert extraction.c1_fit(k, unknowns + 3, TABLE) == extraction.c1_fit(k, table=TABLE)


def test_c1_undersampled_rejected():
    with pytest.raises(PreconditionViolation):
        extraction.c1_fit(1, sample_count=3)
