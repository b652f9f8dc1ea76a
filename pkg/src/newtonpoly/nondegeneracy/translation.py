"""
Searching for a translate f(x - x0, y - y0) that is nondegenerate.

A curve model which does not pass through the origin picks up a constant
term, and its Newton polytope fills out towards the axes. Over a large
enough field some translate is nondegenerate; the bounds below are the
sufficient field sizes for this and for the triangle case.
"""

import logging
from typing import Optional, Tuple

from newtonpoly.core.errors import InvalidInputError, NotApplicableError
from newtonpoly.lattice.geometry import LatticePolygon, convex_hull
from newtonpoly.nondegeneracy.checker import is_nondegenerate
from newtonpoly.nondegeneracy.laurent import LaurentPolynomial, newton_polytope, translate_variables

logger = logging.getLogger(__name__)


def find_nondegenerate_translation(
    f: LaurentPolynomial, require_origin: bool = False
) -> Optional[Tuple[int, int]]:
    """
    First (x0, y0) in F_p^2, x0 outermost, with f(x - x0, y - y0) nondegenerate.

    Args:
        f: Polynomial (no negative exponents)
        require_origin: Only accept translates with a nonzero constant term

    Returns:
        The translation, or None if every translate is degenerate
    """
    for x0 in range(f.p):
        for y0 in range(f.p):
            moved = translate_variables(f, x0, y0)
            if moved.is_zero():
                continue
            if require_origin and not moved.coefficient((0, 0)):
                continue
            if not isinstance(newton_polytope(moved), LatticePolygon):
                continue
            if is_nondegenerate(moved).nondegenerate:
                logger.debug(f"Translate by ({x0}, {y0}) of {f} is nondegenerate")
                return x0, y0
    logger.info(f"No nondegenerate translate of {f} over F_{f.p}")
    return None


def _degrees(f: LaurentPolynomial) -> Tuple[int, int]:
    if f.is_zero():
        raise NotApplicableError("The zero polynomial has no degrees")
    return max(e.x for e in f.support), max(e.y for e in f.support)


def translation_field_bound(f: LaurentPolynomial) -> int:
    """
    2(g + max(deg_x, deg_y) - 1) + min(deg_x, deg_y), g the genus of conv(supp f + origin).

    Fields with more elements than this admit a nondegenerate translate
    of any curve with that polytope.
    """
    deg_x, deg_y = _degrees(f)
    hull = convex_hull([*f.support, (0, 0)])
    g = hull.genus if isinstance(hull, LatticePolygon) else 0
    return 2 * (g + max(deg_x, deg_y) - 1) + min(deg_x, deg_y)


def triangle_field_bound(a: int, b: int) -> int:
    """2(g + b - 1) + a for conv{(0,0),(b,0),(0,a)} with a <= b."""
    if not 1 <= a <= b:
        raise InvalidInputError(f"Expected 1 <= a <= b, got a={a}, b={b}")
    g = LatticePolygon(((0, 0), (b, 0), (0, a))).genus
    return 2 * (g + b - 1) + a
