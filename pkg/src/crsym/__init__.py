"""Exact infinitesimal symmetries of weighted homogeneous model hypersurfaces Im w = P(z, zb)."""
from .arith import GaussRat, Rat
from .fields import VField, bracket, graded_degree, known_fields, tangency
from .model import Model, ModelValidationError, build_sos, pseudoconvexity, validate
from .parser import ParseError, parse_expression
from .ring import HoloPoly, MixedPoly, RealPoly, substitute_w, wirtinger
from .solver import full_grading, solve_graded

__all__ = [
    "GaussRat",
    "HoloPoly",
    "MixedPoly",
    "Model",
    "ModelValidationError",
    "ParseError",
    "Rat",
    "RealPoly",
    "VField",
    "bracket",
    "build_sos",
    "full_grading",
    "graded_degree",
    "known_fields",
    "parse_expression",
    "pseudoconvexity",
    "solve_graded",
    "substitute_w",
    "tangency",
    "validate",
    "wirtinger",
]
