"""Multiplier ideals, jumping numbers and log canonical thresholds of monomial space curves."""

from .algebra import SparsePolynomial, parse_polynomial
from .multiplier import (
    CurveAnalysis,
    analyze,
    generators_up_to,
    graded_piece,
    jumping_numbers,
    lct,
    member,
)
from .semigroup import minimal_generators, term_ideal, validate_curve

__all__ = [
    "CurveAnalysis",
    "SparsePolynomial",
    "analyze",
    "generators_up_to",
    "graded_piece",
    "jumping_numbers",
    "lct",
    "member",
    "minimal_generators",
    "parse_polynomial",
    "term_ideal",
    "validate_curve",
]
