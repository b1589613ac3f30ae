"""Exact arithmetic substrate: binomials, rising factorials, polynomials over Q,
Newton interpolation and Gaussian elimination.

Rationals are :class:`fractions.Fraction`, which reduces to lowest terms on
construction and keeps a positive denominator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DuplicateAbscissa, NonIntegerResult, PreconditionViolation, SingularSystem

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational",
    "Polynomial",
    "NewtonInterpolator",
    "binomial",
    "catalan",
    "pochhammer",
    "poly_eval",
    "interpolate",
    "solve_linear",
    "to_count",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), or 0 whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    return binomial(2 * n, n) // (n + 1)


def pochhammer(a: Number, n: int) -> Fraction:
    """Rising factorial a (a+1) ... (a+n-1); the empty product is 1."""
    if n < 0:
        raise PreconditionViolation(f"pochhammer length must be >= 0, got {n}")
    a = Fraction(a)
    result = Fraction(1)
    for i in range(n):
        result *= a + i
    return result


def to_count(value: Number, what: str = "value") -> int:
    """Convert an exact rational to int, refusing proper fractions."""
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} = {value} is not an integer")
    return value.numerator


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over Q; ``coeffs[i]`` multiplies x**i.

    The coefficient tuple is canonical (no trailing zeros), so dataclass
    equality is coefficient-wise equality.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number]) -> "Polynomial":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    def degree(self) -> int:
        """len(coeffs) - 1, so the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def primitive(self) -> tuple[Fraction, "Polynomial"]:
        """Split into content * primitive integer polynomial with positive leading term."""
        if self.is_zero():
            return Fraction(0), Polynomial()
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), Polynomial(tuple(v // g for v in ints))

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Number]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        out = ""
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}*{mono}"
            else:
                body = f"({mag})*{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


def poly_eval(p: Polynomial, x: Number) -> Fraction:
    """Horner evaluation."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


class NewtonInterpolator:
    """Incremental Newton divided differences over Q.

    Points can be appended one at a time; :meth:`polynomial` returns the
    unique interpolant of degree < number of points seen so far.
    """

    def __init__(self):
        self.xs: list[Fraction] = []
        # diagonal of the divided-difference table: f[x0], f[x0,x1], ...
        self.newton: list[Fraction] = []
        # last row of the table, needed to extend by one point
        self._row: list[Fraction] = []

    def __len__(self) -> int:
        return len(self.xs)

    def add(self, x: Number, y: Number) -> None:
        x, y = Fraction(x), Fraction(y)
        if x in self.xs:
            raise DuplicateAbscissa(f"abscissa {x} already present")
        row = [y]
        # row[j] = f[x_{i-j}, ..., x_i]
        for j, prev in enumerate(self._row, start=1):
            row.append((row[j - 1] - prev) / (x - self.xs[-j]))
        self.xs.append(x)
        self._row = row
        self.newton.append(row[-1])

    def polynomial(self) -> Polynomial:
        # nested form c0 + (x-x0)(c1 + (x-x1)(c2 + ...))
        acc = Polynomial()
        for i in range(len(self.newton) - 1, -1, -1):
            acc = acc * Polynomial((-self.xs[i], 1)) + Polynomial.constant(self.newton[i])
        return acc


def interpolate(points: Sequence[tuple[Number, Number]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points``."""
    if not points:
        raise PreconditionViolation("interpolate needs at least one point")
    interp = NewtonInterpolator()
    for x, y in points:
        interp.add(x, y)
    return interp.polynomial()


def solve_linear(A: Sequence[Sequence[Number]], b: Sequence[Number]) -> list[Fraction]:
    """Solve the square system A x = b exactly by Gauss-Jordan elimination."""
    n = len(A)
    if len(b) != n or any(len(row) != n for row in A):
        raise PreconditionViolation("solve_linear needs a square matrix and matching right-hand side")
    M = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem(f"matrix is singular (no pivot in column {col})")
        M[col], M[pivot] = M[pivot], M[col]
        p = M[col][col]
        pivot_row = [v / p for v in M[col]]
        M[col] = pivot_row
        for r in range(n):
            if r != col and M[r][col] != 0:
                factor = M[r][col]
                M[r] = [v - factor * pv for v, pv in zip(M[r], pivot_row)]
    return [M[i][n] for i in range(n)]
