"""
Interior hulls, relaxations and maximality of lattice polygons.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Union

from newtonpoly.core.errors import NotApplicableError
from newtonpoly.lattice.geometry import (
    Hull,
    LatticePoint,
    LatticePolygon,
    LatticeSegment,
    RationalPoint,
    convex_hull,
    hull_dimension,
    monotone_chain,
    rational_polygon_points,
)


class Relaxation(enum.Enum):
    """Outcome of relaxing a polygon whose relaxed vertices are not all integral."""

    NOT_LATTICE = "not_lattice"


NOT_LATTICE = Relaxation.NOT_LATTICE


@dataclass(frozen=True)
class InteriorHull:
    """
    Convex hull of the interior lattice points of a polygon.

    ``shape`` is None (empty), a LatticePoint, a LatticeSegment or a
    LatticePolygon; ``points`` holds the interior lattice points.
    """

    shape: Hull
    points: frozenset

    @property
    def kind(self) -> str:
        return ("empty", "point", "segment", "polygon")[hull_dimension(self.shape) + 1]

    @property
    def dimension(self) -> int:
        return hull_dimension(self.shape)

    @property
    def polygon(self) -> Optional[LatticePolygon]:
        return self.shape if isinstance(self.shape, LatticePolygon) else None

    @property
    def boundary_count(self) -> int:
        """r1: lattice points on the boundary of the hull (all of them when degenerate)."""
        if isinstance(self.shape, LatticePolygon):
            return self.shape.boundary_count
        return len(self.points)

    @property
    def genus(self) -> int:
        """g1: interior lattice points of the hull (zero when degenerate)."""
        if isinstance(self.shape, LatticePolygon):
            return self.shape.genus
        return 0

    def to_json(self) -> dict:
        if self.shape is None:
            return {"kind": "empty"}
        if isinstance(self.shape, LatticePoint):
            return {"kind": "point", "point": list(self.shape)}
        if isinstance(self.shape, LatticeSegment):
            return {"kind": "segment", **self.shape.to_json()}
        return {"kind": "polygon", **self.shape.to_json()}


def interior_hull(polygon: LatticePolygon) -> InteriorHull:
    points = polygon.interior_lattice_points
    return InteriorHull(convex_hull(points), points)


def relaxed_region(polygon: LatticePolygon, k: int = 1) -> List[RationalPoint]:
    """
    Vertices of the region cut out by the facet inequalities relaxed by k.

    Each facet inequality n . v <= b becomes n . v <= b + k. The region is
    bounded because the outward normals of a polygon span the plane
    positively, so its vertices are among the pairwise intersections of the
    relaxed lines.

    Args:
        polygon: Two-dimensional lattice polygon
        k: Relaxation amount in lattice units

    Returns:
        Counterclockwise vertex list with exact rational coordinates
    """
    relaxed = [(n, b + k) for n, b in polygon.halfplanes]
    corners = set()
    for (n1, b1), (n2, b2) in combinations(relaxed, 2):
        point = _intersect(n1, b1, n2, b2)
        if point is None:
            continue
        if all(n.x * point[0] + n.y * point[1] <= b for n, b in relaxed):
            corners.add(point)
    return monotone_chain(corners)


def _intersect(n1: LatticePoint, b1: int, n2: LatticePoint, b2: int) -> Optional[RationalPoint]:
    d = n1.x * n2.y - n1.y * n2.x
    if d == 0:
        return None
    return (Fraction(b1 * n2.y - n1.y * b2, d), Fraction(n1.x * b2 - b1 * n2.x, d))


def relax(polygon: LatticePolygon) -> Union[LatticePolygon, Relaxation]:
    """
    The relaxed polygon: every facet moved outward by one lattice unit.

    Returns:
        LatticePolygon when all relaxed vertices are lattice points, otherwise NOT_LATTICE
    """
    region = relaxed_region(polygon, 1)
    if any(x.denominator != 1 or y.denominator != 1 for x, y in region):
        return NOT_LATTICE
    return LatticePolygon(tuple(LatticePoint(int(x), int(y)) for x, y in region))


def relaxed_vertex(polygon: LatticePolygon, vertex: Sequence[int]) -> RationalPoint:
    """
    Intersection of the two relaxed facet lines adjacent to a vertex.

    Args:
        polygon: Two-dimensional lattice polygon
        vertex: One of its vertices

    Returns:
        Exact rational point

    Raises:
        NotApplicableError: If ``vertex`` is not a vertex of the polygon
    """
    vertex = LatticePoint(*vertex)
    if vertex not in polygon.vertices:
        raise NotApplicableError(f"{vertex} is not a vertex of {polygon}")
    i = polygon.vertices.index(vertex)
    (n_in, b_in), (n_out, b_out) = polygon.halfplanes[i - 1], polygon.halfplanes[i]
    return _intersect(n_in, b_in + 1, n_out, b_out + 1)


def is_hyperelliptic_polytope(polygon: LatticePolygon) -> bool:
    """
    True iff the interior lattice points are collinear.

    Raises:
        NotApplicableError: For genus <= 1, where collinearity is vacuous
    """
    if polygon.genus <= 1:
        raise NotApplicableError(
            f"Hyperellipticity needs genus >= 2, polygon has genus {polygon.genus}"
        )
    return interior_hull(polygon).dimension < 2


def augmentations(polygon: LatticePolygon, margin: int = 1) -> List[LatticePoint]:
    """
    Lattice points q outside the polygon whose addition keeps the interior points.

    Candidates come from the region relaxed by 1 + margin. Whenever some
    augmentation exists, one exists at height 1 over every facet it sees,
    i.e. inside the region relaxed by one, so the margin only widens the
    search.

    Args:
        polygon: Two-dimensional lattice polygon
        margin: Extra relaxation beyond one lattice unit

    Returns:
        Sorted list of augmentation points (empty iff the polygon is maximal)
    """
    interior = polygon.interior_lattice_points
    found = []
    for q in rational_polygon_points(relaxed_region(polygon, 1 + margin)):
        if polygon.contains(q):
            continue
        bigger = convex_hull(list(polygon.vertices) + [q])
        if bigger.interior_lattice_points == interior:
            found.append(q)
    return sorted(found)


def is_maximal(polygon: LatticePolygon) -> bool:
    """
    Whether no strictly larger lattice polygon has the same interior points.

    For a two-dimensional interior hull this is the test P == relax(hull);
    otherwise the definition is checked directly via ``augmentations``.

    Raises:
        NotApplicableError: For genus-0 polygons
    """
    if polygon.genus == 0:
        raise NotApplicableError("Maximality is only defined here for genus >= 1")

    hull = interior_hull(polygon)
    if hull.dimension < 2:
        return not augmentations(polygon)
    return relax(hull.polygon) == polygon


def maximal_closure(polygon: LatticePolygon) -> LatticePolygon:
    """
    Smallest maximal polygon containing a polygon with a two-dimensional interior hull.

    Raises:
        NotApplicableError: If the interior hull is not two-dimensional
    """
    hull = interior_hull(polygon)
    if hull.dimension < 2:
        raise NotApplicableError("Maximal closure needs a two-dimensional interior hull")
    closure = relax(hull.polygon)
    # the relaxation of an interior hull always contains the polygon and is integral
    assert closure is not NOT_LATTICE, f"Relaxation of the interior hull of {polygon} is not integral"
    return closure
