"""
Unimodular affine maps and the canonical form of lattice polygons.

Two polygons are equivalent when a map v -> Av + b with A in GL2(Z)
carries one onto the other. Reflections count, so the canonical form
quotients by orientation as well.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # older sympy
    from sympy.core.numbers import igcdex

from newtonpoly.core.errors import InvalidInputError
from newtonpoly.lattice.geometry import (
    LatticePoint,
    LatticePolygon,
    LatticeSegment,
    Hull,
    convex_hull,
    primitive,
)


@dataclass(frozen=True)
class UnimodularAffineMap:
    """v -> A v + b with A = [[a11, a12], [a21, a22]] and det A = +-1."""

    a11: int = 1
    a12: int = 0
    a21: int = 0
    a22: int = 1
    b1: int = 0
    b2: int = 0

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22", "b1", "b2"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidInputError(f"Map entry {name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.det not in (1, -1):
            raise InvalidInputError(f"Matrix has determinant {self.det}, expected +-1")

    @classmethod
    def identity(cls) -> "UnimodularAffineMap":
        return cls()

    @classmethod
    def translation(cls, v: Sequence[int]) -> "UnimodularAffineMap":
        return cls(b1=v[0], b2=v[1])

    @classmethod
    def random(cls, rng: np.random.Generator, steps: int = 6, spread: int = 5) -> "UnimodularAffineMap":
        """
        Draw a random map as a product of elementary shears and a sign flip.

        Args:
            rng: numpy random generator
            steps: Number of elementary shears to multiply
            spread: Bound on shear factors and translation entries

        Returns:
            Random UnimodularAffineMap
        """
        m = cls()
        for _ in range(steps):
            k = int(rng.integers(-spread, spread + 1))
            if rng.integers(2):
                m = cls(1, k, 0, 1).compose(m)
            else:
                m = cls(1, 0, k, 1).compose(m)
        if rng.integers(2):
            m = cls(-1, 0, 0, 1).compose(m)
        shift = cls.translation(
            (int(rng.integers(-spread, spread + 1)), int(rng.integers(-spread, spread + 1)))
        )
        return shift.compose(m)

    @property
    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def linear(self, v: Sequence[int]) -> LatticePoint:
        return LatticePoint(self.a11 * v[0] + self.a12 * v[1], self.a21 * v[0] + self.a22 * v[1])

    def __call__(self, v: Sequence[int]) -> LatticePoint:
        return LatticePoint(
            self.a11 * v[0] + self.a12 * v[1] + self.b1,
            self.a21 * v[0] + self.a22 * v[1] + self.b2,
        )

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """Return self after other, i.e. v -> self(other(v))."""
        return UnimodularAffineMap(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
            self.a11 * other.b1 + self.a12 * other.b2 + self.b1,
            self.a21 * other.b1 + self.a22 * other.b2 + self.b2,
        )

    def inverse(self) -> "UnimodularAffineMap":
        d = self.det
        a11, a12, a21, a22 = d * self.a22, -d * self.a12, -d * self.a21, d * self.a11
        return UnimodularAffineMap(
            a11,
            a12,
            a21,
            a22,
            -(a11 * self.b1 + a12 * self.b2),
            -(a21 * self.b1 + a22 * self.b2),
        )

    def to_json(self) -> dict:
        return {"matrix": [[self.a11, self.a12], [self.a21, self.a22]], "translation": [self.b1, self.b2]}


MIRROR = UnimodularAffineMap(-1, 0, 0, 1)


def map_points(m: UnimodularAffineMap, points: Iterable[Sequence[int]]) -> List[LatticePoint]:
    return [m(p) for p in points]


def apply_map(m: UnimodularAffineMap, polygon: LatticePolygon) -> LatticePolygon:
    """
    Image of a polygon under a unimodular affine map.

    A reflection reverses the vertex order; the constructor puts it back
    into counterclockwise normal form.
    """
    images = map_points(m, polygon.vertices)
    if m.det < 0:
        images.reverse()
    return LatticePolygon(tuple(images))


def apply_map_to_hull(m: UnimodularAffineMap, hull: Hull) -> Hull:
    if hull is None:
        return None
    if isinstance(hull, LatticePoint):
        return m(hull)
    if isinstance(hull, LatticeSegment):
        return LatticeSegment(m(hull.start), m(hull.end))
    return apply_map(m, hull)


def _edge_normalizer(
    vertices: Tuple[LatticePoint, ...], i: int
) -> UnimodularAffineMap:
    """
    Map sending vertex i to the origin and edge i onto the positive x-axis.

    The polygon then lies in y >= 0; a final shear puts the previous
    vertex (px, py) at 0 <= px < py.
    """
    n = len(vertices)
    v, w, prev = vertices[i], vertices[(i + 1) % n], vertices[i - 1]
    (d1, d2), _ = primitive(w - v)
    s, t, g = igcdex(d1, d2)
    if g < 0:
        s, t = -s, -t
    rotate = UnimodularAffineMap(int(s), int(t), -d2, d1)

    px, py = rotate.linear(prev - v)
    shear = UnimodularAffineMap(1, -(px // py), 0, 1)

    linear = shear.compose(rotate)
    origin = linear.linear(v)
    return UnimodularAffineMap(linear.a11, linear.a12, linear.a21, linear.a22, -origin.x, -origin.y)


def canonical_form(polygon: LatticePolygon) -> Tuple[LatticePolygon, UnimodularAffineMap]:
    """
    Canonical representative of a polygon's equivalence class.

    Every (vertex, orientation) pair gives one normalized placement of the
    polygon; the lexicographically smallest vertex tuple among them is the
    canonical form. Each placement is determined by the pair alone, so
    equivalent polygons see the same candidate set.

    Args:
        polygon: Input polygon

    Returns:
        Tuple of (canonical polygon, map m with apply_map(m, polygon) == canonical)
    """
    best: Optional[LatticePolygon] = None
    best_map: Optional[UnimodularAffineMap] = None

    for pre in (UnimodularAffineMap.identity(), MIRROR):
        source = apply_map(pre, polygon) if pre is MIRROR else polygon
        vertices = source.vertices
        for i in range(len(vertices)):
            normalizer = _edge_normalizer(vertices, i)
            candidate = LatticePolygon(tuple(map_points(normalizer, vertices)))
            if best is None or candidate.vertices < best.vertices:
                best = candidate
                best_map = normalizer.compose(pre)

    return best, best_map


def canonical_key(polygon: LatticePolygon) -> Tuple[LatticePoint, ...]:
    return canonical_form(polygon)[0].vertices


def is_equivalent(p: LatticePolygon, q: LatticePolygon) -> bool:
    """True iff some unimodular affine map carries p onto q."""
    if len(p.vertices) != len(q.vertices) or p.twice_area != q.twice_area:
        return False
    if p.boundary_count != q.boundary_count:
        return False
    return canonical_key(p) == canonical_key(q)


def canonical_point_set(points: Iterable[Sequence[int]]) -> Tuple[LatticePoint, ...]:
    """
    Canonical form of a finite point set with a two-dimensional hull.

    Used to compare interior point configurations; the point set must be
    the full lattice point set of its hull for the result to be an
    equivalence invariant of the configuration.
    """
    hull = convex_hull(points)
    if not isinstance(hull, LatticePolygon):
        raise InvalidInputError("Point set does not span a polygon")
    return canonical_key(hull)


def lattice_width_direction(polygon: LatticePolygon) -> Tuple[int, LatticePoint]:
    """
    Lattice width of a polygon together with a direction attaining it.

    Directions are searched over primitive (u1, u2) with |u1|, |u2| bounded
    by the coordinate spread of the polygon, one representative per sign
    class. Ties go to the lexicographically smallest direction.
    """
    xs = [v.x for v in polygon.vertices]
    ys = [v.y for v in polygon.vertices]
    spread = max(max(xs) - min(xs), max(ys) - min(ys))

    best: Optional[Tuple[int, LatticePoint]] = None
    for u2 in range(0, spread + 1):
        for u1 in range(-spread, spread + 1):
            if u2 == 0 and u1 <= 0:
                continue
            direction, length = primitive((u1, u2))
            if length != 1:
                continue
            values = [u1 * v.x + u2 * v.y for v in polygon.vertices]
            width = max(values) - min(values)
            if best is None or (width, direction) < best:
                best = (width, direction)
    return best


def lattice_width(polygon: LatticePolygon) -> int:
    return lattice_width_direction(polygon)[0]
