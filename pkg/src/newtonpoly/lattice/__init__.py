"""
Lattice geometry: points, polygons, hulls and unimodular equivalence.
"""

from .geometry import (
    LatticePoint,
    LatticePolygon,
    LatticeSegment,
    boundary_count,
    convex_hull,
    edge_lattice_length,
    halfplanes,
    interior_lattice_points,
    lattice_points,
    standard_simplex,
    twice_area,
)
from .transforms import (
    UnimodularAffineMap,
    apply_map,
    canonical_form,
    is_equivalent,
    lattice_width,
)

__all__ = [
    "LatticePoint",
    "LatticePolygon",
    "LatticeSegment",
    "UnimodularAffineMap",
    "apply_map",
    "boundary_count",
    "canonical_form",
    "convex_hull",
    "edge_lattice_length",
    "halfplanes",
    "interior_lattice_points",
    "is_equivalent",
    "lattice_points",
    "lattice_width",
    "standard_simplex",
    "twice_area",
]
