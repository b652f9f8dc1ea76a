"""
Exhaustive search for degeneracy witnesses over small extension fields.

A solution found in some F_{p^m}^{*2} proves the face degenerate. Finding
nothing up to ``m_max`` is only evidence, since a witness may live in a
larger extension.
"""

import logging
from typing import Dict, List, NamedTuple, Optional

import numpy as np

from newtonpoly.core.errors import InvalidInputError
from newtonpoly.nondegeneracy.checker import Face, face_restriction
from newtonpoly.nondegeneracy.extension_field import ExtensionField, extension_field
from newtonpoly.nondegeneracy.laurent import LaurentPolynomial

logger = logging.getLogger(__name__)


class FaceSolution(NamedTuple):
    """Common zero (x, y) in F_{p^degree}, elements encoded by their base-p digits."""

    degree: int
    x: int
    y: int

    def to_json(self) -> Dict[str, int]:
        return self._asdict()


def _evaluate(field: ExtensionField, f: LaurentPolynomial, log_x: np.ndarray, log_y: int) -> np.ndarray:
    values = np.zeros(len(log_x), dtype=np.int64)
    for e, c in f.terms:
        values = field.add(values, field.power_by_log(c, log_x, e.x, log_y, e.y))
    return values


def search_field(field: ExtensionField, system: List[LaurentPolynomial]) -> Optional[FaceSolution]:
    """First (x, y) in the torus of ``field`` killing every polynomial, y-major then x."""
    xs = field.nonzero_elements()
    log_x = field.log[xs]
    nonzero = [g for g in system if not g.is_zero()]
    for y in xs:
        log_y = int(field.log[y])
        hits = np.ones(len(xs), dtype=bool)
        for g in nonzero:
            hits &= _evaluate(field, g, log_x, log_y) == 0
            if not hits.any():
                break
        if hits.any():
            return FaceSolution(field.m, int(xs[np.argmax(hits)]), int(y))
    return None


def brute_force_face_check(f: LaurentPolynomial, face: Face, m_max: int = 2) -> Optional[FaceSolution]:
    """
    Search F_{p^m}^{*2} for m = 1 .. m_max for a zero of the face system.

    Args:
        f: Polynomial with a two-dimensional Newton polytope
        face: Vertex, edge or the whole polygon of Δ(f)
        m_max: Largest extension degree to search

    Returns:
        The first solution found, or None once every field is exhausted
    """
    if m_max < 1:
        raise InvalidInputError(f"m_max must be at least 1, got {m_max}")
    restricted = face_restriction(f, face)
    system = [restricted, restricted.log_derivative(0), restricted.log_derivative(1)]
    for m in range(1, m_max + 1):
        solution = search_field(extension_field(f.p, m), system)
        if solution is not None:
            logger.debug(f"Face {face!r} of {f} vanishes at {solution}")
            return solution
    return None
