"""Binomial-sum expressions that rebuild long-walk counts from short walks.

Each right-hand side needs quarter-plane counts F(2k-2; ., .) or
F(2k-1; ., .) for a small prefix length; they are read from a DP table that
the caller may pass in (a cached table is used otherwise).  Binomials with
out-of-range indices and F at negative coordinates both contribute 0.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..errors import PreconditionViolation
from ..exact_math import binomial as C
from ..exact_math import to_count
from ..walk_dp import DPTable, Region, shared_table

DEFAULT_TABLE_SIZE = 64


def quarter_table(table: Optional[DPTable], m_needed: int) -> DPTable:
    if table is None:
        return shared_table(Region.QUARTER, max(m_needed, DEFAULT_TABLE_SIZE))
    if table.region is not Region.QUARTER:
        raise PreconditionViolation(f"need a quarter-plane table, got {table.region.value}")
    if table.m_max < m_needed:
        raise PreconditionViolation(f"table reaches m={table.m_max}, need m={m_needed}")
    return table


def theorem3_admissible(n: int, k: int, r: int) -> bool:
    """Parameter triples where the prefix/suffix split is meaningful.

    Besides r <= n + k the walk must be at least as long as the 2k - 2 step
    prefix, i.e. n - k + r + 2 >= 0.
    """
    return n >= 0 and k >= 1 and r <= n + k and n - k + r + 2 >= 0


def theorem3_rhs(n: int, k: int, r: int, table: Optional[DPTable] = None) -> int:
    """Right side of the recurrence for F(n+k+r; n+k-r, n), t summed over 0..k-1."""
    if n < 0 or k < 1 or r > n + k:
        raise PreconditionViolation(f"need n >= 0, k >= 1, r <= n+k; got n={n}, k={k}, r={r}")
    F = quarter_table(table, 2 * k - 2).get
    N = n - k + r + 2
    total = 0
    for t in range(k - 1):
        total += (C(N, n - t) - C(N, n + t + 3)) * F(2 * k - 2, 2 * t + 2, t)
    for s in range(k):
        for t in range(k):
            total += C(N, s + 1) * (C(N, n - t + 1) - C(N, n + t + 2)) * F(2 * k - 2, 2 * t, s + t)
    return total


def theorem3_rhs_shifted(n: int, k: int, r: int, table: Optional[DPTable] = None) -> int:
    """Same quantity, written with t over -1..k-2 and C(N, k-s) weights."""
    if n < 0 or k < 1 or r > n + k:
        raise PreconditionViolation(f"need n >= 0, k >= 1, r <= n+k; got n={n}, k={k}, r={r}")
    F = quarter_table(table, 2 * k - 2).get
    N = n - k + r + 2
    total = 0
    for t in range(k - 1):
        total += (C(N, n - t) - C(N, n + t + 3)) * F(2 * k - 2, 2 * t + 2, t)
    for s in range(k):
        for t in range(-1, k - 1):
            total += C(N, k - s) * (C(N, n - t) - C(N, n + t + 3)) * F(2 * k - 2, 2 * t + 2, k - s + t)
    return total


def theorem3_axis_rhs(n: int, k: int, table: Optional[DPTable] = None) -> int:
    """F(2n+2k; 0, n) from the r = n + k case, with the binomial differences collapsed."""
    if n < 0 or k < 1:
        raise PreconditionViolation(f"need n >= 0, k >= 1; got n={n}, k={k}")
    F = quarter_table(table, 2 * k - 2).get
    total = Fraction(0)
    for t in range(k - 1):
        total += Fraction(2 * t + 3, 2 * n + 3) * C(2 * n + 3, n + t + 3) * F(2 * k - 2, 2 * t + 2, t)
    for s in range(k):
        for t in range(k):
            weight = Fraction(2 * t + 1, 2 * n + 3) * C(2 * n + 2, s + 1) * C(2 * n + 3, n + t + 2)
            total += weight * F(2 * k - 2, 2 * t, s + t)
    return to_count(total, f"theorem3_axis_rhs(n={n}, k={k})")


def theorem5_rhs(n: int, k: int, table: Optional[DPTable] = None) -> int:
    """Right side of the recurrence for F(n+2k; n, 0) over (2k-1)-step prefixes."""
    if n < 0 or k < 1:
        raise PreconditionViolation(f"need n >= 0, k >= 1; got n={n}, k={k}")
    F = quarter_table(table, 2 * k - 1).get
    total = Fraction(0)
    for s in range(1, k + 1):
        for t in range(s + 1):
            weight = Fraction(s - t + 1, n + 2) * C(n + 2, s + 1) * C(n + 2, t)
            total += weight * F(2 * k - 1, 2 * s - 1, s - t)
    return to_count(total, f"theorem5_rhs(n={n}, k={k})")


def diagonal_double_sum(m: int, table: Optional[DPTable] = None) -> int:
    """Sum of F(m; n1, n2) over n1 = m mod 2, n1 <= m, 0 <= n2 <= (m + n1) / 2."""
    F = quarter_table(table, m).get
    return sum(F(m, n1, n2) for n1 in range(m % 2, m + 1, 2) for n2 in range((m + n1) // 2 + 1))
