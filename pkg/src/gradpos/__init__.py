"""Graded posets of roots: ideal polynomials, involutions and rowmotion."""
from __future__ import annotations

from .errors import EnumerationLimitError, InvalidInput, InvariantViolation, NotGradedError
from .gradings import GradingSpec, delta1, delta1_extra_special, invariants_report, parse_grading
from .involutions import Involution, count_self_complementary, grading_involution, w0i_involution
from .polynomials import (
    IntPolynomial,
    RationalProduct,
    gaussian_check,
    km_product,
    m_polynomial,
    n_polynomial,
)
from .poset import GradedPoset, enumerate_antichains, enumerate_lower_ideals, make_chain, make_H, make_K, product
from .root_system import RootSystem, build_root_system, parse_type
from .rowmotion import all_orbits, csp_check, duality_search, rowmotion

__all__ = [
    "EnumerationLimitError", "InvalidInput", "InvariantViolation", "NotGradedError",
    "GradingSpec", "delta1", "delta1_extra_special", "invariants_report", "parse_grading",
    "Involution", "count_self_complementary", "grading_involution", "w0i_involution",
    "IntPolynomial", "RationalProduct", "gaussian_check", "km_product", "m_polynomial", "n_polynomial",
    "GradedPoset", "enumerate_antichains", "enumerate_lower_ideals", "make_chain", "make_H", "make_K", "product",
    "RootSystem", "build_root_system", "parse_type",
    "all_orbits", "csp_check", "duality_search", "rowmotion",
]
