"""
Polygon-level analysis: interior hulls, relaxations, column vectors.

``report`` and ``catalog`` depend on the loops package and are imported
from their modules directly.
"""

from .columns import ColumnVector, column_count, column_vectors, dim_aut, m_bound
from .hulls import (
    NOT_LATTICE,
    InteriorHull,
    augmentations,
    interior_hull,
    is_hyperelliptic_polytope,
    is_maximal,
    maximal_closure,
    relax,
    relaxed_region,
    relaxed_vertex,
)

__all__ = [
    "NOT_LATTICE",
    "ColumnVector",
    "InteriorHull",
    "augmentations",
    "column_count",
    "column_vectors",
    "dim_aut",
    "interior_hull",
    "is_hyperelliptic_polytope",
    "is_maximal",
    "m_bound",
    "maximal_closure",
    "relax",
    "relaxed_region",
    "relaxed_vertex",
]
