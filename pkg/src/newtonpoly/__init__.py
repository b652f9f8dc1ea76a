"""
newtonpoly: lattice polygon combinatorics and nondegenerate curve models.

Interior hulls, relaxations, column vectors, legal loops, genus-indexed
polygon enumeration with moduli bounds, and a face-by-face nondegeneracy
checker for Laurent polynomials over prime fields.
"""

__version__ = "0.1.0"

from .config.settings import NewtonPolyConfig
from .core.batch_runner import BatchRunner
from .lattice.geometry import LatticePolygon, convex_hull
from .nondegeneracy.laurent import LaurentPolynomial, parse_polynomial

__all__ = [
    "BatchRunner",
    "LatticePolygon",
    "LaurentPolynomial",
    "NewtonPolyConfig",
    "convex_hull",
    "parse_polynomial",
]
