"""
Face-by-face nondegeneracy of Laurent polynomials over F_p.

f is nondegenerate when no face τ of its Newton polytope admits a common
zero of f|τ, x df|τ/dx and y df|τ/dy with both coordinates nonzero over
the algebraic closure. Vertices reduce to a nonzero coefficient, edges
to a squarefree test of a univariate polynomial, and the full polygon to
a unit-ideal test with the extra variable t enforcing xyt = 1.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, NamedTuple, Optional, Tuple, Union

from sympy import Poly, groebner, symbols

from newtonpoly.core.errors import InvalidInputError, NotApplicableError
from newtonpoly.lattice.geometry import LatticePoint, LatticePolygon, LatticeSegment, primitive
from newtonpoly.nondegeneracy.laurent import X, Y, LaurentPolynomial, newton_polytope

logger = logging.getLogger(__name__)

T, S = symbols("t s")

Face = Union[LatticePoint, LatticeSegment, LatticePolygon]


def face_kind(face: Face) -> str:
    if isinstance(face, LatticePolygon):
        return "polygon"
    if isinstance(face, LatticeSegment):
        return "edge"
    return "vertex"


def faces_of(polygon: LatticePolygon) -> List[Face]:
    """Vertices, then edges, then the polygon itself."""
    return [*polygon.vertices, *polygon.segments, polygon]


def _is_face(face: Face, polygon: LatticePolygon) -> bool:
    if isinstance(face, LatticePolygon):
        return face == polygon
    if isinstance(face, LatticeSegment):
        return face in polygon.segments
    return tuple(face) in polygon.vertices


def face_restriction(f: LaurentPolynomial, face: Face) -> LaurentPolynomial:
    """
    The terms of f whose exponents lie on the face.

    Raises:
        InvalidInputError: If ``face`` is not a face of the Newton polytope
    """
    polygon = newton_polytope(f)
    if not isinstance(polygon, LatticePolygon) or not _is_face(face, polygon):
        raise InvalidInputError(f"{face!r} is not a face of the Newton polytope of {f}")
    if isinstance(face, LatticePolygon):
        return f
    if isinstance(face, LatticeSegment):
        return f.restrict(face.contains)
    return f.restrict(lambda e: e == tuple(face))


@dataclass(frozen=True)
class FaceVerdict:
    face: Face
    nondegenerate: bool
    witness: Optional[str] = None

    @property
    def kind(self) -> str:
        return face_kind(self.face)

    def to_json(self) -> Dict[str, Any]:
        if isinstance(self.face, LatticePolygon):
            points = [list(v) for v in self.face.vertices]
        elif isinstance(self.face, LatticeSegment):
            points = [list(v) for v in self.face.endpoints]
        else:
            points = [list(self.face)]
        return {
            "kind": self.kind,
            "face": points,
            "nondegenerate": self.nondegenerate,
            "witness": self.witness,
        }


class NondegeneracyResult(NamedTuple):
    nondegenerate: bool
    verdicts: List[FaceVerdict]

    def failing_faces(self) -> List[FaceVerdict]:
        return [v for v in self.verdicts if not v.nondegenerate]

    def to_json(self) -> Dict[str, Any]:
        return {
            "nondegenerate": self.nondegenerate,
            "faces": [v.to_json() for v in self.verdicts],
        }


def edge_polynomial(f: LaurentPolynomial, edge: LatticeSegment) -> Poly:
    """
    u(s) = sum_k c(a + k d) s^k along an edge a -> a + l d, d primitive.

    Any unimodular map taking d to (1, 0) turns f restricted to the edge
    into a monomial times u(x), so the edge verdict only depends on u.
    """
    start, end = edge.endpoints
    direction, length = primitive(end - start)
    coefficients = [f.coefficient(start + direction.scale(k)) for k in range(length + 1)]
    return Poly(list(reversed(coefficients)), S, modulus=f.p)


def check_vertex(f: LaurentPolynomial, vertex: LatticePoint) -> FaceVerdict:
    coefficient = f.coefficient(vertex)
    return FaceVerdict(vertex, coefficient != 0, None if coefficient else "zero coefficient")


def check_edge(f: LaurentPolynomial, edge: LatticeSegment) -> FaceVerdict:
    """
    No common torus zero of u and s u'(s), i.e. u has no repeated root.

    u has nonzero constant and leading coefficients (both are vertex
    coefficients), so its roots avoid 0 and the test is gcd(u, u') = 1.
    A vanishing derivative (u a p-th power) gives gcd = u.
    """
    u = edge_polynomial(f, edge)
    common = u.gcd(u.diff(S))
    if common.degree() > 0:
        return FaceVerdict(edge, False, f"gcd(u, u') = {common.as_expr()}")
    return FaceVerdict(edge, True)


def face_ideal_basis(f: LaurentPolynomial) -> List:
    """Reduced grevlex basis of <F, x F_x, y F_y, xyt - 1> over F_p, F = f cleared of denominators."""
    generators = [f.to_sympy()]
    generators += [d.to_sympy(shift=-f.min_exponents()) for d in (f.log_derivative(0), f.log_derivative(1))]
    generators = [g for g in generators if g != 0]
    generators.append(X * Y * T - 1)
    basis = groebner(generators, X, Y, T, modulus=f.p, order="grevlex")
    return list(basis.exprs)


def check_polygon(f: LaurentPolynomial, polygon: LatticePolygon) -> FaceVerdict:
    basis = face_ideal_basis(f)
    if any(g.is_number and g != 0 for g in basis):
        return FaceVerdict(polygon, True, "unit ideal")
    return FaceVerdict(polygon, False, f"basis {[str(g) for g in basis]}")


def is_nondegenerate(f: LaurentPolynomial) -> NondegeneracyResult:
    """
    Decide nondegeneracy face by face.

    Args:
        f: Polynomial with a two-dimensional Newton polytope

    Returns:
        NondegeneracyResult with one verdict per vertex, edge and the polygon

    Raises:
        NotApplicableError: If the Newton polytope is not two-dimensional
    """
    polygon = newton_polytope(f)
    if not isinstance(polygon, LatticePolygon):
        raise NotApplicableError(f"Newton polytope of {f} is not two-dimensional")

    verdicts = [check_vertex(f, v) for v in polygon.vertices]
    verdicts += [check_edge(f, e) for e in polygon.segments]
    verdicts.append(check_polygon(f, polygon))
    result = NondegeneracyResult(all(v.nondegenerate for v in verdicts), verdicts)
    logger.debug(f"{f}: {'nondegenerate' if result.nondegenerate else 'degenerate'}")
    return result


def check_face(f: LaurentPolynomial, face: Face) -> FaceVerdict:
    """Verdict for a single face of the Newton polytope."""
    restricted = face_restriction(f, face)
    if isinstance(face, LatticePolygon):
        return check_polygon(restricted, face)
    if isinstance(face, LatticeSegment):
        return check_edge(restricted, face)
    return check_vertex(restricted, face)


def genus_of_model(f: LaurentPolynomial) -> int:
    """
    Genus of the curve f = 0, read off as the interior point count of Δ(f).

    Raises:
        NotApplicableError: If f is degenerate (the count is only the genus for nondegenerate f)
    """
    result = is_nondegenerate(f)
    if not result.nondegenerate:
        faces: Tuple[str, ...] = tuple(v.kind for v in result.failing_faces())
        raise NotApplicableError(f"{f} is degenerate on faces {faces}; genus is not read off Δ(f)")
    return newton_polytope(f).genus
