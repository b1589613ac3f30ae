"""Layered dynamic programming for walks with steps W, NE, E, SW.

Three regions are supported: the quarter plane (i, j >= 0), the upper half
plane (j >= 0) and the wedge i >= 0, j <= i.  Each layer is a sparse map from
admissible lattice points to exact counts; points outside the region are never
stored, and lookups of absent points return 0.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterator, Mapping

from .errors import PreconditionViolation, QueryExceedsTable, RegionMismatch

Point = tuple[int, int]
Layer = Mapping[Point, int]

STEPS: dict[str, Point] = {"W": (-1, 0), "NE": (1, 1), "E": (1, 0), "SW": (-1, -1)}


class Region(enum.Enum):
    QUARTER = "quarter"
    HALF = "half"
    DIAGONAL = "diagonal"

    def admits(self, i: int, j: int) -> bool:
        if self is Region.QUARTER:
            return i >= 0 and j >= 0
        if self is Region.HALF:
            return j >= 0
        return i >= 0 and j <= i


@dataclass(frozen=True)
class WalkQuery:
    region: Region
    m: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.m < 0:
            raise PreconditionViolation(f"step count must be >= 0, got {self.m}")


class DPTable:
    """Per-step-count layers of walk counts from the origin.

    With ``rolling=True`` only the most recent layer is retained; earlier
    layers raise :class:`QueryExceedsTable` on access.
    """

    def __init__(self, region: Region, m_max: int, layers: list[Layer], first_layer: int = 0):
        self.region = region
        self.m_max = m_max
        self._layers = layers
        self._first = first_layer

    @property
    def rolling(self) -> bool:
        return self._first > 0

    def layer(self, m: int) -> Layer:
        if m < 0 or m > self.m_max:
            raise QueryExceedsTable(f"layer {m} outside table range 0..{self.m_max}")
        if m < self._first:
            raise QueryExceedsTable(f"layer {m} was discarded by a rolling build (kept from {self._first})")
        return self._layers[m - self._first]

    def get(self, m: int, n1: int, n2: int) -> int:
        """Count at (m; n1, n2); 0 for negative m or out-of-region points."""
        if m < 0:
            return 0
        return self.layer(m).get((n1, n2), 0)

    def __repr__(self):
        return f"DPTable(region={self.region.value}, m_max={self.m_max}, rolling={self.rolling})"


def next_layer(region: Region, prev: Layer) -> dict[Point, int]:
    """Apply one step of the recurrence.

    The count at p is the sum over the four predecessors p - step, with absent
    predecessors contributing 0.
    """
    candidates = {(i + di, j + dj) for (i, j) in prev for di, dj in STEPS.values()}
    out: dict[Point, int] = {}
    for i, j in candidates:
        if not region.admits(i, j):
            continue
        total = (
            prev.get((i + 1, j), 0)  # arrived by W
            + prev.get((i - 1, j), 0)  # E
            + prev.get((i + 1, j + 1), 0)  # SW
            + prev.get((i - 1, j - 1), 0)  # NE
        )
        if total:
            out[(i, j)] = total
    return out


def iter_layers(region: Region) -> Iterator[tuple[int, Layer]]:
    """Yield (m, layer) for m = 0, 1, 2, ... holding only one layer at a time."""
    layer: Layer = MappingProxyType({(0, 0): 1})
    m = 0
    while True:
        yield m, layer
        layer = MappingProxyType(next_layer(region, layer))
        m += 1


def build_table(region: Region, m_max: int, rolling: bool = False) -> DPTable:
    if m_max < 0:
        raise PreconditionViolation(f"m_max must be >= 0, got {m_max}")
    layers: list[Layer] = []
    for m, layer in iter_layers(region):
        if rolling:
            layers = [layer]
        else:
            layers.append(layer)
        if m == m_max:
            break
    return DPTable(region, m_max, layers, first_layer=m_max if rolling else 0)


@functools.lru_cache(maxsize=16)
def shared_table(region: Region, m_max: int) -> DPTable:
    """Cached full table; tables are never mutated after construction."""
    return build_table(region, m_max)


def count(table: DPTable, q: WalkQuery) -> int:
    if q.region is not table.region:
        raise RegionMismatch(f"query region {q.region.value} does not match table region {table.region.value}")
    if q.m > table.m_max:
        raise QueryExceedsTable(f"m={q.m} exceeds table m_max={table.m_max}")
    return table.get(q.m, q.n1, q.n2)


def diagonal_total(table: DPTable, m: int) -> int:
    """Number of m-step walks that stay in the wedge i >= 0, j <= i."""
    if table.region is not Region.DIAGONAL:
        raise RegionMismatch(f"diagonal_total needs a diagonal table, got {table.region.value}")
    return sum(table.layer(m).values())


def layer_total(table: DPTable, m: int) -> int:
    return sum(table.layer(m).values())


def table_rows(table: DPTable) -> Iterator[tuple[int, int, int, int]]:
    """(m, n1, n2, count) for every stored entry, sorted."""
    start = table.m_max if table.rolling else 0
    for m in range(start, table.m_max + 1):
        for (n1, n2), c in sorted(table.layer(m).items()):
            yield m, n1, n2, c
