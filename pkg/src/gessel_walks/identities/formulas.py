"""Closed-form evaluators.

Every evaluator works in exact rational arithmetic and converts to an
integer only at the end through :func:`to_count`, so a mistyped coefficient
usually surfaces as :class:`NonIntegerResult` instead of a wrong count.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import PreconditionViolation
from ..exact_math import binomial, catalan, pochhammer, to_count

Q = Fraction


def gessel_closed_form(n: int) -> int:
    """Quarter-plane loops of length 2n: 16^n (5/6)_n (1/2)_n / ((2)_n (5/3)_n)."""
    if n < 0:
        raise PreconditionViolation(f"n must be >= 0, got {n}")
    value = Q(16) ** n * pochhammer(Q(5, 6), n) * pochhammer(Q(1, 2), n)
    value /= pochhammer(2, n) * pochhammer(Q(5, 3), n)
    return to_count(value, f"gessel_closed_form({n})")


def c1_formula(n: int) -> int:
    """Conjectured closed form for F(2n; 0, 1), n >= 1."""
    if n < 1:
        raise PreconditionViolation(f"c1_formula needs n >= 1, got {n}")
    first = Q(5, 27) * pochhammer(Q(7, 6), n) / pochhammer(Q(7, 3), n)
    second = Q(111 * n * n + 183 * n - 50, 270) * pochhammer(Q(5, 6), n) / pochhammer(Q(8, 3), n)
    value = Q(16) ** n * pochhammer(Q(1, 2), n) / pochhammer(3, n) * (first + second)
    return to_count(value, f"c1_formula({n})")


def c1_weights(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Hypergeometric weights multiplying p_k(n) and q_k(n) in the general C1 form."""
    common = Q(16) ** n * pochhammer(Q(1, 2), n) / pochhammer(k + 2, n)
    wp = common * pochhammer(Q(7, 6), n) / pochhammer(Q(3 * k + 4, 3), n)
    wq = common * pochhammer(Q(5, 6), n) / pochhammer(Q(3 * k + 5, 3), n)
    return wp, wq


def _c2_value(n: int, k: int) -> Fraction:
    h = pochhammer(Q(3, 2), n)
    if k == 0:
        return Q(4) ** n * pochhammer(Q(1, 2), n) / pochhammer(2, n)
    if k == 1:
        return Q(2) ** (2 * n + 1) * (n + 1) * h / pochhammer(3, n)
    if k == 2:
        return Q(4) ** n * (n + 1) * (8 * n**2 + 32 * n + 33) * h / (3 * pochhammer(4, n))
    if k == 3:
        quartic = 64 * n**4 + 672 * n**3 + 2648 * n**2 + 4641 * n + 3060
        return Q(4) ** (n - 1) * (n + 1) * quartic * h / (9 * pochhammer(5, n))
    raise PreconditionViolation(f"c2_formula is displayed only for 0 <= k <= 3, got k={k}")


def c2_formula(n: int, k: int) -> int:
    """Displayed closed forms for F(2n + 2k; 0, n), k = 0..3."""
    if n < 0:
        raise PreconditionViolation(f"n must be >= 0, got {n}")
    return to_count(_c2_value(n, k), f"c2_formula(n={n}, k={k})")


def c2_formula_k0_alt(n: int) -> int:
    """Second printed form of the k = 0 case: 4^n (3/2)_n / ((2n+1) (2)_n)."""
    value = Q(4) ** n * pochhammer(Q(3, 2), n) / ((2 * n + 1) * pochhammer(2, n))
    return to_count(value, f"c2_formula_k0_alt({n})")


def c4_formula(n: int, k: int) -> int:
    """Displayed closed forms for F(n + 2k; n, 0), k = 0..3."""
    if n < 0:
        raise PreconditionViolation(f"n must be >= 0, got {n}")
    if k == 0:
        value = Q(1)
    elif k == 1:
        value = Q(1, 2) * (n + 1) * (n + 4)
    elif k == 2:
        value = Q(1, 12) * (n + 1) * (n**3 + 15 * n**2 + 74 * n + 132)
    elif k == 3:
        quintic = n**5 + 32 * n**4 + 407 * n**3 + 2620 * n**2 + 8604 * n + 12240
        value = Q(1, 144) * (n + 1) * quintic
    else:
        raise PreconditionViolation(f"c4_formula is displayed only for 0 <= k <= 3, got k={k}")
    return to_count(value, f"c4_formula(n={n}, k={k})")


def boundary_formulas(m: int, n1: int, n2: int) -> int:
    """Counts on the two extreme boundaries of the support.

    m == n1 >= n2 gives C(n1, n2); m == 2 n2 - n1 with n1 <= n2 gives
    (n1 + 1) / (2 n2 - n1 + 1) * C(2 n2 - n1 + 1, n2 + 1).
    """
    if n1 < 0 or n2 < 0:
        raise PreconditionViolation(f"boundary formulas need n1, n2 >= 0, got ({n1}, {n2})")
    if m == n1 and n1 >= n2:
        return binomial(n1, n2)
    if m == 2 * n2 - n1 and n1 <= n2:
        value = Q(n1 + 1, 2 * n2 - n1 + 1) * binomial(2 * n2 - n1 + 1, n2 + 1)
        return to_count(value, f"boundary_formulas({m}, {n1}, {n2})")
    raise PreconditionViolation(f"({m}; {n1}, {n2}) lies on neither boundary line")


def half_plane_formula(m: int, n1: int, n2: int) -> int:
    """Reflection-principle count of walks confined to j >= 0."""
    if m < 0 or n2 < 0:
        raise PreconditionViolation(f"half_plane_formula needs m, n2 >= 0, got m={m}, n2={n2}")
    if (m - n1) % 2 or abs(n1) > m:
        raise PreconditionViolation(f"half_plane_formula needs m = n1 mod 2 and |n1| <= m, got m={m}, n1={n1}")
    a = (m - n1) // 2
    value = Q(n2 + 1, m + 1) * binomial(m + 1, a) * binomial(m + 1, a + n2 + 1)
    return to_count(value, f"half_plane_formula({m}, {n1}, {n2})")


def fk_edge_formulas(n: int) -> tuple[int, int, int]:
    """(F_0(n), F_{n-1}(n), F_n(n)) for the agreement-refined loop counts."""
    if n < 1:
        raise PreconditionViolation(f"fk_edge_formulas needs n >= 1, got {n}")
    middle = Q(2 * n + 1, 2) * binomial(2 * n, n) - 2 ** (2 * n - 1)
    return catalan(n), to_count(middle, f"F_(n-1)({n})"), catalan(n)


def p1_as_printed(n: int) -> int:
    """C(2n, n)^2 / (n + 1), which equals C_n * C(2n, n)."""
    return to_count(Q(binomial(2 * n, n) ** 2, n + 1), f"p1_as_printed({n})")


def p1_catalan_squared(n: int) -> int:
    """Independent Dyck path above and below the axis: C_n^2."""
    return catalan(n) ** 2


def p2_watermelon(n: int) -> int:
    value = Q(binomial(2 * n, n) * binomial(2 * n + 2, n), (n + 1) * binomial(n + 3, n))
    return to_count(value, f"p2_watermelon({n})")


def p_split_formulas(n: int) -> tuple[int, int]:
    """(first-class count as printed, second-class watermelon count)."""
    if n < 1:
        raise PreconditionViolation(f"p_split_formulas needs n >= 1, got {n}")
    return p1_as_printed(n), p2_watermelon(n)


def diagonal_step_ratio(j: int) -> Fraction:
    """Conjectured ratio a_j / a_{j-1} for the wedge totals, j >= 1."""
    if j < 1:
        raise PreconditionViolation(f"ratio defined for j >= 1, got {j}")
    if j % 2 == 0:
        m = j // 2
        return Q(12 * m + 2, 3 * m + 1)
    m = (j - 1) // 2
    return Q(4 * m + 2, m + 1)
