"""Cyclotomic points of parametrized polynomials, and the metallic means
and diagonal ratios of regular polygons that they classify."""

from .exact import CycloElement, RootOfUnity, cyclotomic_poly, minimal_polynomial, totient
from .poly import ParseError, SparsePoly, gcd, parse_poly, rational_roots, render, resultant
from .cycpart import cyclotomic_part
from .famsolve import SolutionFamily, solve_param_curve, solve_param_family

__version__ = "0.1.0"

__all__ = [
    "CycloElement", "RootOfUnity", "cyclotomic_poly", "minimal_polynomial", "totient",
    "ParseError", "SparsePoly", "gcd", "parse_poly", "rational_roots", "render",
    "resultant", "cyclotomic_part", "SolutionFamily", "solve_param_curve",
    "solve_param_family",
]
