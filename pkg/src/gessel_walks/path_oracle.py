"""Exhaustive enumeration over pairs of +-1 sequences.

A walk with steps W, NE, E, SW is encoded by a pair sequence
(xi_1, eta_1), ..., (xi_m, eta_m) of signs via step = (xi, (xi - eta) / 2).
With partial sums S_j and T_j of the two sign sequences the walk stays in
the quarter plane exactly when S_j >= 0 and S_j >= T_j, and ends at
(S_m, (S_m - T_m) / 2).

Nothing here shares code with the dynamic program: every count is obtained
by literally listing all 2^m xi-sequences, discarding those whose prefix
sums break the xi-only constraints, and testing each survivor against all
2^m eta-sequences at once with numpy.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import PreconditionViolation, SizeCap

MAX_LENGTH = 13
# bound on the boolean work array (xi batch x eta rows x length)
_BATCH_CELLS = 1 << 22


@dataclass(frozen=True)
class StepPair:
    xi: int
    eta: int

    def __post_init__(self):
        if self.xi not in (-1, 1) or self.eta not in (-1, 1):
            raise PreconditionViolation(f"step pair components must be +-1, got ({self.xi}, {self.eta})")

    @property
    def step(self) -> tuple[int, int]:
        return self.xi, (self.xi - self.eta) // 2


@dataclass(frozen=True)
class PairPathConstraint:
    length: int
    endpoint_S: int
    endpoint_T: int
    require_S_nonneg: bool = False
    require_S_ge_T: bool = False
    require_T_nonpos: bool = False
    require_T_nonneg: bool = False
    require_T_crosses_axis: bool = False

    def __post_init__(self):
        t_flags = (self.require_T_nonpos, self.require_T_nonneg, self.require_T_crosses_axis)
        if sum(t_flags) > 1:
            raise PreconditionViolation("at most one constraint on the sign of T may be set")
        if self.length < 0:
            raise PreconditionViolation(f"length must be >= 0, got {self.length}")


def _check_cap(length: int) -> None:
    if length < 0:
        raise PreconditionViolation(f"length must be >= 0, got {length}")
    if length > MAX_LENGTH:
        raise SizeCap(f"exhaustive enumeration capped at length {MAX_LENGTH}, asked for {length}")


@functools.lru_cache(maxsize=None)
def _sign_sequences(length: int) -> tuple[np.ndarray, np.ndarray]:
    """All 2^length sign sequences and their prefix sums, one per row."""
    idx = np.arange(1 << length, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(length, dtype=np.int64)) & 1
    signs = (2 * bits - 1).astype(np.int8)
    sums = np.cumsum(signs, axis=1, dtype=np.int16)
    return signs, sums


def _final(sums: np.ndarray) -> np.ndarray:
    if sums.shape[1] == 0:
        return np.zeros(sums.shape[0], dtype=np.int16)
    return sums[:, -1]


def _xi_rows(length: int, require_S_nonneg: bool, endpoint: Optional[int]):
    signs, sums = _sign_sequences(length)
    keep = np.ones(len(signs), dtype=bool)
    if require_S_nonneg and length:
        keep &= sums.min(axis=1) >= 0
    if endpoint is not None:
        keep &= _final(sums) == endpoint
    return signs[keep], sums[keep]


def _eta_rows(length: int, constraint_flags: tuple[bool, bool, bool], endpoint: Optional[int]):
    nonpos, nonneg, crosses = constraint_flags
    signs, sums = _sign_sequences(length)
    keep = np.ones(len(signs), dtype=bool)
    if length:
        if nonpos:
            keep &= sums.max(axis=1) <= 0
        if nonneg:
            keep &= sums.min(axis=1) >= 0
        if crosses:
            keep &= (sums.max(axis=1) > 0) & (sums.min(axis=1) < 0)
    elif crosses:
        keep[:] = False
    if endpoint is not None:
        keep &= _final(sums) == endpoint
    return signs[keep], sums[keep]


def _batches(n_rows: int, cells_per_row: int):
    step = max(1, _BATCH_CELLS // max(1, cells_per_row))
    for start in range(0, n_rows, step):
        yield slice(start, min(n_rows, start + step))


def count_pairs(c: PairPathConstraint, agreements: Optional[int] = None) -> int:
    """Number of pair sequences satisfying ``c``.

    If ``agreements`` is given, only sequences with exactly that many indices
    j where xi_j == eta_j are counted.
    """
    _check_cap(c.length)
    L = c.length
    xi, S = _xi_rows(L, c.require_S_nonneg, c.endpoint_S)
    eta, T = _eta_rows(L, (c.require_T_nonpos, c.require_T_nonneg, c.require_T_crosses_axis), c.endpoint_T)
    if not c.require_S_ge_T and agreements is None:
        return int(len(xi)) * int(len(eta))
    total = 0
    for sl in _batches(len(xi), len(eta) * max(L, 1)):
        ok = np.ones((sl.stop - sl.start, len(eta)), dtype=bool)
        if c.require_S_ge_T and L:
            ok &= (S[sl, None, :] >= T[None, :, :]).all(axis=2)
        if agreements is not None:
            agree = (xi[sl, None, :] == eta[None, :, :]).sum(axis=2)
            ok &= agree == agreements
        total += int(ok.sum())
    return total


@functools.lru_cache(maxsize=None)
def endpoint_histogram(length: int, require_S_nonneg: bool, require_S_ge_T: bool) -> dict[tuple[int, int], int]:
    """Map (S_m, T_m) -> number of admissible pair sequences of this length."""
    _check_cap(length)
    L = length
    xi, S = _xi_rows(L, require_S_nonneg, None)
    eta, T = _eta_rows(L, (False, False, False), None)
    s_end = _final(S).astype(np.int64) + L
    t_end = _final(T).astype(np.int64) + L
    width = 2 * L + 1
    onehot_t = np.zeros((len(eta), width), dtype=np.int64)
    onehot_t[np.arange(len(eta)), t_end] = 1
    grid = np.zeros((width, width), dtype=np.int64)
    for sl in _batches(len(xi), len(eta) * max(L, 1)):
        if require_S_ge_T and L:
            ok = (S[sl, None, :] >= T[None, :, :]).all(axis=2)
        else:
            ok = np.ones((sl.stop - sl.start, len(eta)), dtype=bool)
        per_row = ok.astype(np.int64) @ onehot_t
        np.add.at(grid, s_end[sl], per_row)
    return {
        (int(s) - L, int(t) - L): int(grid[s, t])
        for s, t in zip(*np.nonzero(grid))
    }


def brute_force_F(m: int, n1: int, n2: int) -> int:
    """Quarter-plane walk count F(m; n1, n2) by exhaustive enumeration."""
    hist = endpoint_histogram(m, True, True)
    return hist.get((n1, n1 - 2 * n2), 0)


def brute_force_G(m: int, n1: int, n2: int) -> int:
    """Half-plane (j >= 0) walk count by exhaustive enumeration."""
    hist = endpoint_histogram(m, False, True)
    return hist.get((n1, n1 - 2 * n2), 0)


def _loop_constraint(n: int, **flags) -> PairPathConstraint:
    return PairPathConstraint(
        length=2 * n, endpoint_S=0, endpoint_T=0, require_S_nonneg=True, require_S_ge_T=True, **flags
    )


def refined_count(n: int, k: int) -> int:
    """Loops of length 2n counted with exactly 2k indices where xi_j == eta_j."""
    if n < 0 or not 0 <= k <= n:
        raise PreconditionViolation(f"refined_count needs 0 <= k <= n, got n={n}, k={k}")
    return count_pairs(_loop_constraint(n), agreements=2 * k)


def split_counts(n: int) -> tuple[int, int, int]:
    """(P1, P2, P3): loops where T stays <= 0, stays >= 0, or takes both signs.

    The empty loop (n = 0) is put in the second class only.
    """
    if n < 0:
        raise PreconditionViolation(f"split_counts needs n >= 0, got {n}")
    _check_cap(2 * n)
    if n == 0:
        return 0, 1, 0
    return (
        count_pairs(_loop_constraint(n, require_T_nonpos=True)),
        count_pairs(_loop_constraint(n, require_T_nonneg=True)),
        count_pairs(_loop_constraint(n, require_T_crosses_axis=True)),
    )
