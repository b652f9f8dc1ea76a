"""
Polygon-level statistics bundled into a single report.

The report collects genus, boundary and interior-hull counts, column
vectors, the moduli bound m, maximality and hyperellipticity, and the
legal loop data when the polygon is maximal with a two-dimensional
interior hull.
"""

import logging
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional

from newtonpoly.analysis.columns import column_vectors
from newtonpoly.analysis.hulls import interior_hull, is_maximal, relax
from newtonpoly.core.errors import NotApplicableError
from newtonpoly.lattice.geometry import LatticePolygon, convex_hull
from newtonpoly.lattice.transforms import canonical_key
from newtonpoly.loops.legal_loops import dual_loop, loop_of_polytope, verify_twelve

logger = logging.getLogger(__name__)

GENUS4_ARRANGEMENTS = {
    "a": ((0, 0), (1, 0), (0, 1), (1, 1)),
    "b": ((0, 0), (1, 0), (2, 0), (0, 1)),
    "c": ((0, 1), (1, 1), (1, 2), (2, 0)),
}


@lru_cache(maxsize=None)
def _arrangement_keys() -> Dict[tuple, str]:
    return {canonical_key(convex_hull(points)): name for name, points in GENUS4_ARRANGEMENTS.items()}


def koelman_dim(polygon: LatticePolygon) -> int:
    """
    #points - 1 - dim Aut for a maximal nonhyperelliptic polygon.

    Raises:
        NotApplicableError: If the polygon is hyperelliptic (or genus <= 1) or not maximal
    """
    hull = interior_hull(polygon)
    if hull.dimension < 2:
        raise NotApplicableError(
            f"{polygon} has collinear interior points; the formula needs a nonhyperelliptic polygon"
        )
    if relax(hull.polygon) != polygon:
        raise NotApplicableError(f"{polygon} is not maximal")
    return len(polygon.lattice_points) - 1 - (len(column_vectors(polygon)) + 2)


def classify_genus4_hull(polygon: LatticePolygon) -> str:
    """
    Which of the three genus-4 interior point arrangements a polygon has.

    Returns:
        "a" (unit square), "b" (three collinear plus one) or "c" (skew quadrilateral)

    Raises:
        NotApplicableError: If the genus is not 4 or the interior points are collinear
    """
    if polygon.genus != 4:
        raise NotApplicableError(f"Expected genus 4, got {polygon.genus}")
    hull = interior_hull(polygon)
    if hull.dimension < 2:
        raise NotApplicableError(f"{polygon} is hyperelliptic")
    name = _arrangement_keys().get(canonical_key(hull.polygon))
    assert name is not None, f"Unrecognised genus-4 interior arrangement in {polygon}"
    return name


@dataclass
class PolygonReport:
    """All statistics of one polygon; JSON keys match the field names."""

    vertices: List[List[int]]
    g: int
    r: int
    lattice_points: int
    r1: int
    g1: int
    interior_hull: Dict[str, Any]
    c: int
    m: int
    dim_aut: int
    is_maximal: Optional[bool]
    is_hyperelliptic: Optional[bool]
    dim_M_Delta_upper: int
    koelman_dim: Optional[int]
    column_vectors: List[Dict[str, Any]] = field(default_factory=list)
    loop: Optional[Dict[str, Any]] = None

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)


def analyze(polygon: LatticePolygon) -> PolygonReport:
    """
    Build the full report for a polygon.

    Fields that are undefined for the polygon (maximality at genus 0,
    hyperellipticity below genus 2, the Koelman dimension off maximal
    nonhyperelliptic polygons, loops without a two-dimensional interior
    hull) are reported as None.

    Args:
        polygon: Two-dimensional lattice polygon

    Returns:
        PolygonReport
    """
    hull = interior_hull(polygon)
    columns = column_vectors(polygon)
    point_count = len(polygon.lattice_points)
    c = len(columns)

    maximal = is_maximal(polygon) if polygon.genus >= 1 else None
    hyperelliptic = hull.dimension < 2 if polygon.genus >= 2 else None

    koelman = None
    loop = None
    if maximal and hull.dimension == 2:
        koelman = point_count - 1 - (c + 2)
        legal = loop_of_polytope(polygon)
        twelve = verify_twelve(legal)
        loop = {
            "vectors": legal.to_json()["vectors"],
            "dual": dual_loop(legal).to_json()["vectors"],
            "twelve": twelve.to_json(),
        }
        if not twelve.holds:
            logger.error(f"Twelve identity fails for {polygon}: {twelve}")

    report = PolygonReport(
        vertices=[list(v) for v in polygon.vertices],
        g=polygon.genus,
        r=polygon.boundary_count,
        lattice_points=point_count,
        r1=hull.boundary_count,
        g1=hull.genus,
        interior_hull=hull.to_json(),
        c=c,
        m=point_count - c - 3,
        dim_aut=c + 2,
        is_maximal=maximal,
        is_hyperelliptic=hyperelliptic,
        dim_M_Delta_upper=point_count - 1,
        koelman_dim=koelman,
        column_vectors=[col.to_json() for col in columns],
        loop=loop,
    )
    logger.debug(f"Analyzed {polygon}: g={report.g}, c={report.c}, m={report.m}")
    return report
