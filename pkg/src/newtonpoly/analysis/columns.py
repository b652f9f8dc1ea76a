"""
Column vectors of lattice polygons.

A nonzero v is a column vector with base facet tau when translating
every lattice point of the polygon off tau by v stays inside the
polygon. Their number c governs dim Aut = c + 2 and the bound
m = #points - c - 3.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple

from newtonpoly.lattice.geometry import LatticePoint, LatticePolygon, LatticeSegment

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColumnVector:
    vector: LatticePoint
    base_facets: Tuple[LatticeSegment, ...]

    def to_json(self) -> dict:
        return {
            "vector": list(self.vector),
            "base_facets": [[list(s.start), list(s.end)] for s in self.base_facets],
        }


def column_vectors(polygon: LatticePolygon) -> List[ColumnVector]:
    """
    All column vectors of a polygon with their base facets.

    For each facet tau, any column vector must carry a fixed lattice point s
    off tau to some lattice point q of the polygon, so the candidates
    q - s are complete. Each candidate is then checked pointwise.

    Args:
        polygon: Two-dimensional lattice polygon

    Returns:
        Column vectors sorted by vector
    """
    points = polygon.lattice_points
    facets: Dict[LatticePoint, List[LatticeSegment]] = defaultdict(list)

    for segment in polygon.segments:
        off_facet = [s for s in points if s not in segment.lattice_points]
        anchor = min(off_facet)
        for q in points:
            v = q - anchor
            if v == (0, 0):
                continue
            if all((s + v) in points for s in off_facet):
                facets[v].append(segment)

    result = [ColumnVector(v, tuple(facets[v])) for v in sorted(facets)]
    shared = [c for c in result if len(c.base_facets) > 1]
    if shared:
        logger.debug(f"{len(shared)} column vectors with several base facets in {polygon}")
    return result


def column_count(polygon: LatticePolygon) -> int:
    """c: the number of distinct column vectors."""
    return len(column_vectors(polygon))


def m_bound(polygon: LatticePolygon) -> int:
    """m = #(lattice points) - c - 3."""
    return len(polygon.lattice_points) - column_count(polygon) - 3


def dim_aut(polygon: LatticePolygon) -> int:
    """Dimension of the automorphism group of the toric surface: c + 2."""
    return column_count(polygon) + 2
