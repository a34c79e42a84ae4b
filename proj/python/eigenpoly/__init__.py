"""Exact eigenpolynomials of exactly-solvable differential operators and
the growth of their largest roots."""

from ._eigenpoly import (
    EigenpolyError,
    Eigenpair,
    Operator,
    cauchy_equation,
    check_b_equals_d,
    classify,
    eigenpolynomial,
    exponent_b,
    exponent_d,
    growth_report,
    largest_modulus,
    residual_is_zero,
    roots,
)

__all__ = [
    "EigenpolyError",
    "Eigenpair",
    "Operator",
    "cauchy_equation",
    "check_b_equals_d",
    "classify",
    "eigenpolynomial",
    "exponent_b",
    "exponent_d",
    "growth_report",
    "largest_modulus",
    "residual_is_zero",
    "roots",
]
