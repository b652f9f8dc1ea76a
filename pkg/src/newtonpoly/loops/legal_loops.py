"""
Legal moves and legal loops.

A legal move (v, w) is a pair of lattice vectors spanning, together with
the origin, a triangle whose only nonzero lattice points lie on the
segment from v to w. A legal loop chains such moves cyclically; maximal
polygons with a two-dimensional interior hull produce one from their
relaxed vertices, and every loop satisfies l(L) + l(dual L) = 12 w(L).
"""

from dataclasses import dataclass
from math import gcd
from typing import Sequence, Tuple

from newtonpoly.analysis.columns import column_count
from newtonpoly.analysis.hulls import NOT_LATTICE, interior_hull, relax, relaxed_vertex
from newtonpoly.core.errors import InvalidInputError, NotApplicableError
from newtonpoly.lattice.geometry import LatticePoint, LatticePolygon, as_point, cross, det


def is_legal_move(v: Sequence[int], w: Sequence[int]) -> bool:
    """gcd(v) = gcd(w) = 1 and |det(v, w)| = gcd(w - v), with det nonzero."""
    d = det(v, w)
    if d == 0:
        return False
    if gcd(v[0], v[1]) != 1 or gcd(w[0], w[1]) != 1:
        return False
    return abs(d) == gcd(w[0] - v[0], w[1] - v[1])


@dataclass(frozen=True)
class LegalMove:
    v: LatticePoint
    w: LatticePoint

    def __post_init__(self):
        v, w = as_point(self.v), as_point(self.w)
        if not is_legal_move(v, w):
            raise InvalidInputError(f"({v}, {w}) is not a legal move")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    @property
    def length(self) -> int:
        return det(self.v, self.w)


def move_length(v: Sequence[int], w: Sequence[int]) -> int:
    """
    Signed length det(v, w) of a legal move.

    Raises:
        InvalidInputError: If (v, w) is not legal
    """
    return LegalMove(v, w).length


@dataclass(frozen=True)
class LegalLoop:
    """A cyclic sequence of vectors whose consecutive pairs are legal moves."""

    vectors: Tuple[LatticePoint, ...]

    def __post_init__(self):
        vectors = tuple(as_point(v) for v in self.vectors)
        n = len(vectors)
        if n < 3:
            raise InvalidInputError(f"A legal loop needs at least 3 vectors, got {n}")
        for i in range(n):
            if not is_legal_move(vectors[i], vectors[(i + 1) % n]):
                raise InvalidInputError(
                    f"Move {i} ({vectors[i]} -> {vectors[(i + 1) % n]}) is not legal"
                )
            if cross(vectors[i - 1], vectors[i], vectors[(i + 1) % n]) == 0:
                raise InvalidInputError(f"Vectors around position {i} are collinear")
        object.__setattr__(self, "vectors", vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def moves(self) -> Tuple[Tuple[LatticePoint, LatticePoint], ...]:
        n = len(self.vectors)
        return tuple((self.vectors[i], self.vectors[(i + 1) % n]) for i in range(n))

    def to_json(self) -> dict:
        return {"vectors": [list(v) for v in self.vectors]}


def loop_length(loop: LegalLoop) -> int:
    return sum(det(v, w) for v, w in loop.moves)


def dual_loop(loop: LegalLoop) -> LegalLoop:
    """The loop of primitive directions (v_{i+1} - v_i) / l(v_i, v_{i+1})."""
    dual = []
    for v, w in loop.moves:
        length = det(v, w)
        dx, dy = w.x - v.x, w.y - v.y
        # legality makes w - v exactly |length| times a primitive vector
        assert dx % length == 0 and dy % length == 0
        dual.append(LatticePoint(dx // length, dy // length))
    return LegalLoop(tuple(dual))


def winding_number(loop: LegalLoop) -> int:
    """
    Winding number of the closed path v_1 -> ... -> v_n -> v_1 around the origin.

    Counts signed crossings of the positive x-axis with the half-open
    convention on vertices; legality keeps every segment off the origin.
    """
    winding = 0
    for a, b in loop.moves:
        side = cross(a, b, (0, 0))
        if a.y <= 0 < b.y and side > 0:
            winding += 1
        elif b.y <= 0 < a.y and side < 0:
            winding -= 1
    return winding


def loop_equals_up_to_rotation(loop: LegalLoop, other: LegalLoop) -> bool:
    """Whether ``loop`` is a cyclic shift of the 180-degree rotation of ``other``."""
    if len(loop) != len(other):
        return False
    rotated = tuple(-v for v in other.vectors)
    n = len(loop)
    return any(loop.vectors == rotated[k:] + rotated[:k] for k in range(n))


@dataclass(frozen=True)
class TwelveCheck:
    length: int
    dual_length: int
    winding: int
    holds: bool

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "dual_length": self.dual_length,
            "winding": self.winding,
            "holds": self.holds,
        }


def verify_twelve(loop: LegalLoop) -> TwelveCheck:
    """Evaluate both sides of l(L) + l(dual L) = 12 w(L)."""
    length = loop_length(loop)
    dual_length = loop_length(dual_loop(loop))
    winding = winding_number(loop)
    return TwelveCheck(length, dual_length, winding, length + dual_length == 12 * winding)


def _drop_degenerate(vectors: Sequence[LatticePoint]) -> Tuple[LatticePoint, ...]:
    """
    Remove repeated vectors and middles of collinear triples.

    det is additive along a line, so the loop length is unchanged.
    """
    points = list(vectors)
    changed = True
    while changed and len(points) > 3:
        changed = False
        for i in range(len(points)):
            if cross(points[i - 1], points[i], points[(i + 1) % len(points)]) == 0:
                del points[i]
                changed = True
                break
    return tuple(points)


def loop_of_polytope(polygon: LatticePolygon) -> LegalLoop:
    """
    The legal loop q_i = relaxed vertex of p_i minus p_i over the interior hull.

    Args:
        polygon: Maximal polygon with a two-dimensional interior hull

    Returns:
        LegalLoop in counterclockwise order of the interior hull's vertices

    Raises:
        NotApplicableError: If the interior hull is degenerate or the polygon is not maximal
    """
    hull = interior_hull(polygon).polygon
    if hull is None:
        raise NotApplicableError(f"{polygon} does not have a two-dimensional interior hull")
    relaxed = relax(hull)
    if relaxed is NOT_LATTICE or relaxed != polygon:
        raise NotApplicableError(f"{polygon} is not maximal")

    vectors = []
    for p in hull.vertices:
        x, y = relaxed_vertex(hull, p)
        vectors.append(LatticePoint(int(x) - p.x, int(y) - p.y))
    # an edge that keeps its length under relaxation repeats a vector
    return LegalLoop(_drop_degenerate(vectors))


def loop_bounds(polygon: LatticePolygon) -> dict:
    """
    Loop-derived quantities for a maximal polygon with two-dimensional interior hull.

    Returns:
        Dict with r - r1, l(P), l(dual P), c and r - r1 - c
    """
    loop = loop_of_polytope(polygon)
    hull = interior_hull(polygon)
    r_gap = polygon.boundary_count - hull.boundary_count
    c = column_count(polygon)
    return {
        "r_minus_r1": r_gap,
        "loop_length": loop_length(loop),
        "dual_length": loop_length(dual_loop(loop)),
        "c": c,
        "r_minus_r1_minus_c": r_gap - c,
    }
