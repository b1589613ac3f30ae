"""Exact enumeration of Gessel walks and related non-crossing path pairs."""
from .errors import (
    DuplicateAbscissa,
    GesselError,
    NonIntegerResult,
    PreconditionViolation,
    QueryExceedsTable,
    RegionMismatch,
    SingularSystem,
    SizeCap,
    UnknownSuite,
)
from .walk_dp import DPTable, Region, WalkQuery, build_table, count, diagonal_total

__version__ = "0.1.0"
