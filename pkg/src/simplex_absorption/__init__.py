"""Absorption index and translate index of convex bodies with respect to simplices."""
from .absorption import AbsorptionResult, alpha, circumscribed_test, xi
from .bodies import ConvexBody, ball, sym_cube, unit_ball, unit_cube
from .constructions import hadamard_simplex, random_simplex, regular_inscribed_simplex, standard_simplex
from .errors import (DegenerateSimplex, DimensionMismatch, DimensionTooLarge, GenerationFailed,
                     GeometryError, PreconditionFailed, SingularMatrix, UnsupportedOrder)
from .metrics import SimplexMetrics, compute_metrics
from .search import SearchConfig, SearchResult, minimize_xi
from .simplex import Simplex, make_simplex

__all__ = [
    "AbsorptionResult", "ConvexBody", "DegenerateSimplex", "DimensionMismatch",
    "DimensionTooLarge", "GenerationFailed", "GeometryError", "PreconditionFailed",
    "SearchConfig", "SearchResult", "Simplex", "SimplexMetrics", "SingularMatrix",
    "UnsupportedOrder", "alpha", "ball", "circumscribed_test", "compute_metrics",
    "hadamard_simplex", "make_simplex", "minimize_xi", "random_simplex",
    "regular_inscribed_simplex", "standard_simplex", "sym_cube", "unit_ball", "unit_cube", "xi",
]
