"""Exact extraction of the conjectured polynomial families from DP counts.

Sampling at n = 0..2k determines any polynomial of degree <= 2k; the fit is
then checked at four further points.  A fit that misses a held-out point is
reported with ``degree_ok = False``; it is never refit at a higher degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from ..errors import PreconditionViolation
from ..exact_math import Polynomial, interpolate, pochhammer, solve_linear
from ..walk_dp import DPTable
from .formulas import c1_weights
from .sums import quarter_table

VALIDATION_POINTS = 4


@dataclass(frozen=True)
class PolynomialFinding:
    """Result of one extraction.

    ``companion`` holds the un-normalized family (r_k or s_k) next to the
    normalized polynomial.  A flag is ``None`` when the conjecture makes no
    claim of that kind for this family.
    """

    family: str
    k: int
    poly: Polynomial
    degree_ok: bool
    integrality_ok: Optional[bool]
    leading_ok: Optional[bool]
    divisibility_ok: Optional[bool]
    companion_family: Optional[str] = None
    companion: Optional[Polynomial] = None

    @property
    def all_ok(self) -> bool:
        flags = (self.degree_ok, self.integrality_ok, self.leading_ok, self.divisibility_ok)
        return all(f is not False for f in flags)


def _fit(f: Callable[[int], Fraction], sample: Sequence[int], held_out: Sequence[int]) -> tuple[Polynomial, bool]:
    poly = interpolate([(n, f(n)) for n in sample])
    return poly, all(poly(n) == f(n) for n in held_out)


def _check_k(k: int) -> None:
    if k < 1:
        raise PreconditionViolation(f"extraction needs k >= 1, got {k}")


def c2_extract(k: int, table: Optional[DPTable] = None) -> PolynomialFinding:
    """Normalize F(2n+2k; 0, n) into a polynomial and test its conjectured shape.

    Normalized: n! k! (n+k+1)! / (2n+2)! * F, expected degree 2k-2 with
    integer coefficients and leading coefficient 2^(3k-2).  Companion r_k:
    F * (k+2)_n / (4^n (3/2)_n), expected degree 2k-1 and r_k(-1) = 0.
    """
    _check_k(k)
    sample = range(2 * k + 1)
    held_out = range(2 * k + 1, 2 * k + 1 + VALIDATION_POINTS)
    F = quarter_table(table, 2 * (held_out[-1] + k)).get

    def normalized(n: int) -> Fraction:
        scale = Fraction(math.factorial(n) * math.factorial(k) * math.factorial(n + k + 1), math.factorial(2 * n + 2))
        return scale * F(2 * n + 2 * k, 0, n)

    def r(n: int) -> Fraction:
        return F(2 * n + 2 * k, 0, n) * pochhammer(k + 2, n) / (Fraction(4) ** n * pochhammer(Fraction(3, 2), n))

    poly, valid = _fit(normalized, sample, held_out)
    r_poly, r_valid = _fit(r, sample, held_out)
    return PolynomialFinding(
        family="normalized_C2",
        k=k,
        poly=poly,
        degree_ok=valid and poly.degree() == 2 * k - 2 and r_valid and r_poly.degree() == 2 * k - 1,
        integrality_ok=poly.has_integer_coeffs(),
        leading_ok=poly.leading == 2 ** (3 * k - 2),
        divisibility_ok=r_valid and r_poly(-1) == 0,
        companion_family="r_k",
        companion=r_poly,
    )


def c4_extract(k: int, table: Optional[DPTable] = None) -> PolynomialFinding:
    """Normalize F(n+2k; n, 0) into k! (k+1)! / (n+1) * F and test its shape.

    Normalized: degree 2k-1, integer coefficients, leading coefficient 1.
    Companion s_k = F itself: degree 2k, leading 1 / (k! (k+1)!),
    s_k(-1) = 0.
    """
    _check_k(k)
    sample = range(2 * k + 1)
    held_out = range(2 * k + 1, 2 * k + 1 + VALIDATION_POINTS)
    F = quarter_table(table, held_out[-1] + 2 * k).get
    weight = math.factorial(k) * math.factorial(k + 1)

    def normalized(n: int) -> Fraction:
        return Fraction(weight, n + 1) * F(n + 2 * k, n, 0)

    def s(n: int) -> Fraction:
        return Fraction(F(n + 2 * k, n, 0))

    poly, valid = _fit(normalized, sample, held_out)
    s_poly, s_valid = _fit(s, sample, held_out)
    return PolynomialFinding(
        family="normalized_C4",
        k=k,
        poly=poly,
        degree_ok=valid and poly.degree() == 2 * k - 1 and s_valid and s_poly.degree() == 2 * k,
        integrality_ok=poly.has_integer_coeffs(),
        leading_ok=poly.leading == 1 and s_poly.leading == Fraction(1, weight),
        divisibility_ok=s_valid and s_poly(-1) == 0,
        companion_family="s_k",
        companion=s_poly,
    )


def c1_unknowns(k: int) -> int:
    """Coefficient count of p_k (degree 2k-2) plus q_k (degree 2k)."""
    return (2 * k - 1) + (2 * k + 1)


def _c1_row(n: int, k: int) -> list[Fraction]:
    wp, wq = c1_weights(n, k)
    return [wp * n**i for i in range(2 * k - 1)] + [wq * n**i for i in range(2 * k + 1)]


def c1_fit(k: int, sample_count: Optional[int] = None, table: Optional[DPTable] = None) -> tuple[Polynomial, Polynomial]:
    """Fit p_k, q_k so the two-term hypergeometric form matches F(2n; 0, k).

    Samples n = k, k+1, ..., k + sample_count - 1.  With more samples than
    unknowns the exact normal equations are solved, which recovers the
    exact solution whenever the overdetermined system is consistent.
    """
    _check_k(k)
    unknowns = c1_unknowns(k)
    if sample_count is None:
        sample_count = unknowns
    if sample_count < unknowns:
        raise PreconditionViolation(f"c1_fit(k={k}) needs at least {unknowns} samples, got {sample_count}")
    ns = range(k, k + sample_count)
    F = quarter_table(table, 2 * ns[-1]).get
    A = [_c1_row(n, k) for n in ns]
    b = [Fraction(F(2 * n, 0, k)) for n in ns]
    if sample_count > unknowns:
        At = list(zip(*A))
        b = [sum(a * y for a, y in zip(col, b)) for col in At]
        A = [[sum(x * y for x, y in zip(ci, cj)) for cj in At] for ci in At]
    x = solve_linear(A, b)
    return Polynomial(tuple(x[: 2 * k - 1])), Polynomial(tuple(x[2 * k - 1 :]))


def c1_evaluate(n: int, k: int, p: Polynomial, q: Polynomial) -> Fraction:
    wp, wq = c1_weights(n, k)
    return wp * p(n) + wq * q(n)


def c1_findings(k: int, held_out: int = 3, table: Optional[DPTable] = None) -> tuple[PolynomialFinding, PolynomialFinding]:
    """Fit p_k, q_k from the minimal sample and validate on ``held_out`` later n."""
    p, q = c1_fit(k, table=table)
    first_check = k + c1_unknowns(k)
    ns = range(first_check, first_check + held_out)
    F = quarter_table(table, 2 * ns[-1]).get
    valid = all(c1_evaluate(n, k, p, q) == F(2 * n, 0, k) for n in ns)
    return (
        PolynomialFinding("p_k", k, p, degree_ok=valid and p.degree() <= 2 * k - 2,
                          integrality_ok=None, leading_ok=None, divisibility_ok=None),
        PolynomialFinding("q_k", k, q, degree_ok=valid and q.degree() <= 2 * k,
                          integrality_ok=None, leading_ok=None, divisibility_ok=None),
    )
