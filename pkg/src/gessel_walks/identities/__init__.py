"""Closed forms, binomial-sum recurrences, polynomial extraction and the
verification suites that check them against exact enumeration."""
from .extraction import PolynomialFinding, c1_findings, c1_fit, c2_extract, c4_extract
from .formulas import (
    boundary_formulas,
    c1_formula,
    c2_formula,
    c4_formula,
    fk_edge_formulas,
    gessel_closed_form,
    half_plane_formula,
    p_split_formulas,
)
from .sums import diagonal_double_sum, theorem3_axis_rhs, theorem3_rhs, theorem5_rhs
from .suites import (
    KNOWN_DISCREPANCIES,
    SUITE_IDS,
    IdentityInstance,
    a_recurrence_check,
    c3_check,
    run_suite,
)

__all__ = [
    "IdentityInstance",
    "KNOWN_DISCREPANCIES",
    "PolynomialFinding",
    "SUITE_IDS",
    "a_recurrence_check",
    "boundary_formulas",
    "c1_findings",
    "c1_fit",
    "c1_formula",
    "c2_extract",
    "c2_formula",
    "c3_check",
    "c4_extract",
    "c4_formula",
    "diagonal_double_sum",
    "fk_edge_formulas",
    "gessel_closed_form",
    "half_plane_formula",
    "p_split_formulas",
    "run_suite",
    "theorem3_axis_rhs",
    "theorem3_rhs",
    "theorem5_rhs",
]
