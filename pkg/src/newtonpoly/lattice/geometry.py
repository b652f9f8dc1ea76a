"""
Exact plane lattice geometry for newtonpoly.

Points, segments and convex lattice polygons, together with the hull,
lattice-point and half-plane routines every other module builds on.
All arithmetic is on Python integers (or Fractions where a rational
point is unavoidable), so nothing here can overflow or round.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, gcd
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from newtonpoly.core.errors import InvalidInputError


class LatticePoint(NamedTuple):
    """A point of Z^2. Tuples compare lexicographically, which the canonical form relies on."""

    x: int
    y: int

    def __add__(self, other) -> "LatticePoint":  # type: ignore[override]
        return LatticePoint(self.x + other[0], self.y + other[1])

    def __sub__(self, other) -> "LatticePoint":
        return LatticePoint(self.x - other[0], self.y - other[1])

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.x, -self.y)

    def scale(self, k: int) -> "LatticePoint":
        return LatticePoint(k * self.x, k * self.y)


# A half-plane n . v <= offset, n a primitive outward normal.
HalfPlane = Tuple[LatticePoint, int]

RationalPoint = Tuple[Fraction, Fraction]


def as_point(value: Sequence[int]) -> LatticePoint:
    """Coerce a pair into a LatticePoint, rejecting non-integers."""
    if len(value) != 2:
        raise InvalidInputError(f"Expected a coordinate pair, got {value!r}")
    x, y = value
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise InvalidInputError(f"Lattice coordinates must be integers, got {value!r}")
    return LatticePoint(x, y)


def cross(o: Sequence, a: Sequence, b: Sequence):
    """Twice the signed area of the triangle o, a, b (positive for a left turn)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def det(v: Sequence[int], w: Sequence[int]) -> int:
    return v[0] * w[1] - v[1] * w[0]


def primitive(v: Sequence[int]) -> Tuple[LatticePoint, int]:
    """Split a nonzero integer vector into (primitive direction, lattice length)."""
    g = gcd(v[0], v[1])
    if g == 0:
        raise InvalidInputError("The zero vector has no primitive direction")
    return LatticePoint(v[0] // g, v[1] // g), g


def monotone_chain(points: Iterable) -> list:
    """
    Andrew's monotone chain over any exactly comparable coordinates.

    Returns the strictly convex hull vertices counterclockwise, starting at
    the lexicographically smallest point. Collinear points are dropped.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    hull = lower[:-1] + upper[:-1]
    return hull


@dataclass(frozen=True)
class LatticeSegment:
    """A lattice segment; endpoints are stored in lexicographic order."""

    start: LatticePoint
    end: LatticePoint

    def __post_init__(self):
        start, end = as_point(self.start), as_point(self.end)
        if start == end:
            raise InvalidInputError(f"Segment endpoints must be distinct, got {start}")
        if end < start:
            start, end = end, start
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)

    @property
    def endpoints(self) -> Tuple[LatticePoint, LatticePoint]:
        return (self.start, self.end)

    @property
    def lattice_length(self) -> int:
        return edge_lattice_length(self)

    @cached_property
    def lattice_points(self) -> frozenset:
        step, length = primitive(self.end - self.start)
        return frozenset(self.start + step.scale(k) for k in range(length + 1))

    def contains(self, q: Sequence[int]) -> bool:
        return q in self.lattice_points

    def to_json(self) -> dict:
        return {"segment": [list(self.start), list(self.end)]}


@dataclass(frozen=True)
class LatticePolygon:
    """
    A two-dimensional convex lattice polygon.

    Vertices are kept counterclockwise, strictly convex, starting at the
    lexicographically smallest vertex, so two polygons with the same
    vertex set compare equal and hash alike. Use ``from_vertices`` for
    input in arbitrary order or orientation.
    """

    vertices: Tuple[LatticePoint, ...]

    def __post_init__(self):
        verts = tuple(as_point(v) for v in self.vertices)
        if len(verts) < 3:
            raise InvalidInputError(f"A polygon needs at least 3 vertices, got {len(verts)}")
        if len(set(verts)) != len(verts):
            raise InvalidInputError(f"Polygon vertices must be distinct: {verts}")

        n = len(verts)
        for i in range(n):
            if cross(verts[i - 1], verts[i], verts[(i + 1) % n]) <= 0:
                raise InvalidInputError(
                    f"Vertices are not strictly convex and counterclockwise at {verts[i]}"
                )

        start = verts.index(min(verts))
        object.__setattr__(self, "vertices", verts[start:] + verts[:start])

    @classmethod
    def from_vertices(cls, points: Iterable[Sequence[int]]) -> "LatticePolygon":
        """
        Build a polygon from vertices in any order or orientation.

        Args:
            points: The polygon's vertices

        Returns:
            Normalized LatticePolygon

        Raises:
            InvalidInputError: If the points are not in strictly convex position
        """
        pts = [as_point(p) for p in points]
        distinct = set(pts)
        if len(distinct) != len(pts):
            raise InvalidInputError(f"Repeated vertex in {pts}")
        hull = monotone_chain(distinct)
        if len(hull) < 3:
            raise InvalidInputError(f"Vertices {pts} do not span a polygon")
        if len(hull) != len(distinct):
            raise InvalidInputError(f"Vertices {pts} are not in strictly convex position")
        return cls(tuple(hull))

    @property
    def edges(self) -> List[Tuple[LatticePoint, LatticePoint]]:
        """Counterclockwise edges as (tail, head) pairs."""
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    @property
    def segments(self) -> List[LatticeSegment]:
        return [LatticeSegment(p, q) for p, q in self.edges]

    @cached_property
    def twice_area(self) -> int:
        origin = self.vertices[0]
        return sum(
            cross(origin, self.vertices[i], self.vertices[i + 1])
            for i in range(1, len(self.vertices) - 1)
        )

    @cached_property
    def halfplanes(self) -> Tuple[HalfPlane, ...]:
        """Facet inequalities n . v <= b with primitive outward normals, in edge order."""
        result = []
        for p, q in self.edges:
            direction, _ = primitive(q - p)
            normal = LatticePoint(direction.y, -direction.x)
            result.append((normal, normal.x * p.x + normal.y * p.y))
        return tuple(result)

    @cached_property
    def lattice_points(self) -> frozenset:
        return frozenset(_scan_rows(self, strict=False))

    @cached_property
    def interior_lattice_points(self) -> frozenset:
        return frozenset(_scan_rows(self, strict=True))

    @property
    def genus(self) -> int:
        return len(self.interior_lattice_points)

    @cached_property
    def boundary_count(self) -> int:
        return sum(gcd(q.x - p.x, q.y - p.y) for p, q in self.edges)

    def contains(self, q: Sequence) -> bool:
        return all(n.x * q[0] + n.y * q[1] <= b for n, b in self.halfplanes)

    def strictly_contains(self, q: Sequence) -> bool:
        return all(n.x * q[0] + n.y * q[1] < b for n, b in self.halfplanes)

    def translate(self, v: Sequence[int]) -> "LatticePolygon":
        return LatticePolygon(tuple(p + v for p in self.vertices))

    def scale(self, k: int) -> "LatticePolygon":
        if k < 1:
            raise InvalidInputError(f"Scale factor must be positive, got {k}")
        return LatticePolygon(tuple(p.scale(k) for p in self.vertices))

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}

    def __repr__(self) -> str:
        inner = ", ".join(f"({v.x},{v.y})" for v in self.vertices)
        return f"LatticePolygon[{inner}]"


Hull = Union[LatticePolygon, LatticeSegment, LatticePoint, None]


def _scan_rows(polygon: LatticePolygon, strict: bool):
    """Yield the lattice points of a polygon row by row from its half-planes."""
    slack = 1 if strict else 0
    ys = [v.y for v in polygon.vertices]
    for y in range(min(ys), max(ys) + 1):
        lo: Optional[int] = None
        hi: Optional[int] = None
        empty = False
        for n, b in polygon.halfplanes:
            # n.x * x <= c
            c = b - slack - n.y * y
            if n.x > 0:
                bound = c // n.x
                hi = bound if hi is None else min(hi, bound)
            elif n.x < 0:
                bound = -(c // -n.x)
                lo = bound if lo is None else max(lo, bound)
            elif c < 0:
                empty = True
                break
        if empty or lo is None or hi is None:
            continue
        for x in range(lo, hi + 1):
            yield LatticePoint(x, y)


def convex_hull(points: Iterable[Sequence[int]]) -> Hull:
    """
    Convex hull of a finite set of lattice points, classified by dimension.

    Args:
        points: Lattice points (any iterable of integer pairs)

    Returns:
        LatticePolygon, LatticeSegment, LatticePoint, or None for the empty set
    """
    pts = {as_point(p) for p in points}
    if not pts:
        return None
    if len(pts) == 1:
        return next(iter(pts))

    hull = monotone_chain(pts)
    if len(hull) == 2:
        return LatticeSegment(hull[0], hull[1])
    return LatticePolygon(tuple(hull))


def hull_points(hull: Hull) -> frozenset:
    """Lattice points of a hull of any dimension."""
    if hull is None:
        return frozenset()
    if isinstance(hull, LatticePoint):
        return frozenset([hull])
    return hull.lattice_points


def hull_dimension(hull: Hull) -> int:
    if hull is None:
        return -1
    if isinstance(hull, LatticePoint):
        return 0
    if isinstance(hull, LatticeSegment):
        return 1
    return 2


def lattice_points(polygon: LatticePolygon) -> frozenset:
    return polygon.lattice_points


def interior_lattice_points(polygon: LatticePolygon) -> frozenset:
    return polygon.interior_lattice_points


def boundary_count(polygon: LatticePolygon) -> int:
    return polygon.boundary_count


def twice_area(polygon: LatticePolygon) -> int:
    return polygon.twice_area


def halfplanes(polygon: LatticePolygon) -> Tuple[HalfPlane, ...]:
    return polygon.halfplanes


def edge_lattice_length(segment: LatticeSegment) -> int:
    """Number of lattice points on the segment minus one."""
    return gcd(segment.end.x - segment.start.x, segment.end.y - segment.start.y)


def standard_simplex(d: int = 1) -> LatticePolygon:
    """The triangle d*Sigma = conv{(0,0),(d,0),(0,d)}."""
    if d < 1:
        raise InvalidInputError(f"Simplex size must be positive, got {d}")
    return LatticePolygon(((0, 0), (d, 0), (0, d)))


def polygon_key(polygon: LatticePolygon) -> Tuple[int, Tuple[LatticePoint, ...]]:
    """Sort key for corpora: vertex count first, then the vertex list."""
    return (len(polygon.vertices), polygon.vertices)


def rational_polygon_points(vertices: Sequence[RationalPoint]) -> List[LatticePoint]:
    """
    Lattice points inside a convex polygon with rational vertices.

    Vertices must be counterclockwise and strictly convex (as produced by
    ``monotone_chain``).
    """
    n = len(vertices)
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    x_lo, x_hi = floor(min(xs)), ceil(max(xs))
    y_lo, y_hi = floor(min(ys)), ceil(max(ys))
    inside = []
    for x in range(x_lo, x_hi + 1):
        for y in range(y_lo, y_hi + 1):
            if all(cross(vertices[i], vertices[(i + 1) % n], (x, y)) >= 0 for i in range(n)):
                inside.append(LatticePoint(x, y))
    return inside


