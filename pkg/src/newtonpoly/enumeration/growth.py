"""
Growing lattice polygons one lattice point at a time.

Every lattice polygon with n >= 4 lattice points is either the thin
triangle conv{(0,0),(n-2,0),(0,1)} or conv(Q + {q}) for a polygon Q with
n - 1 points and a lattice point q at height one over each facet of Q
that it sees, i.e. q in the region relaxed by one. Growing level by
level therefore reaches every polygon class.
"""

import logging
import sys
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from newtonpoly.analysis.hulls import relaxed_region
from newtonpoly.core.errors import InvalidInputError
from newtonpoly.lattice.geometry import (
    LatticePoint,
    LatticePolygon,
    convex_hull,
    polygon_key,
    rational_polygon_points,
    standard_simplex,
)
from newtonpoly.lattice.transforms import canonical_form

logger = logging.getLogger(__name__)

CanonicalKey = Tuple[LatticePoint, ...]


def thin_triangle(n: int) -> LatticePolygon:
    """conv{(0,0),(n-2,0),(0,1)}, the polygon with n points all but one on a line."""
    return LatticePolygon(((0, 0), (n - 2, 0), (0, 1)))


def single_point_extensions(polygon: LatticePolygon) -> Iterator[LatticePolygon]:
    """Yield conv(P + {q}) for every lattice point q of the relaxed region outside P."""
    for q in rational_polygon_points(relaxed_region(polygon, 1)):
        if polygon.contains(q):
            continue
        yield convex_hull(list(polygon.vertices) + [q])


def _next_level(
    level: Dict[CanonicalKey, LatticePolygon],
    point_count: int,
    max_genus: Optional[int],
    show_progress: bool,
) -> Dict[CanonicalKey, LatticePolygon]:
    seed = canonical_form(thin_triangle(point_count))[0]
    grown = {seed.vertices: seed}
    for polygon in tqdm(
        level.values(),
        desc=f"{point_count} points",
        disable=not show_progress,
        file=sys.stderr,
        leave=False,
    ):
        for bigger in single_point_extensions(polygon):
            if max_genus is not None and bigger.genus > max_genus:
                continue
            canonical = canonical_form(bigger)[0]
            grown.setdefault(canonical.vertices, canonical)
    return grown


def grow_levels(
    max_points: int, max_genus: Optional[int] = None, show_progress: bool = False
) -> Iterator[Tuple[int, List[LatticePolygon]]]:
    """
    Yield (n, canonical polygons with exactly n lattice points) for n = 3 .. max_points.

    Args:
        max_points: Largest lattice point count to reach
        max_genus: Drop polygons with more interior points (genus never
            decreases under growth, so this prunes whole subtrees)
        show_progress: Show a tqdm bar on stderr

    Yields:
        Point count and the sorted polygons of that level
    """
    if max_points < 3:
        raise InvalidInputError(f"A lattice polygon has at least 3 lattice points, got {max_points}")

    sigma = canonical_form(standard_simplex(1))[0]
    level = {sigma.vertices: sigma}
    yield 3, [sigma]
    for n in range(4, max_points + 1):
        level = _next_level(level, n, max_genus, show_progress)
        logger.debug(f"{len(level)} polygon classes with {n} lattice points")
        yield n, sorted(level.values(), key=polygon_key)


@lru_cache(maxsize=None)
def polygons_with_point_count(n: int) -> Tuple[LatticePolygon, ...]:
    """All two-dimensional lattice polygons with exactly n lattice points, up to equivalence."""
    polygons: Tuple[LatticePolygon, ...] = ()
    for _, level in grow_levels(n):
        polygons = tuple(level)
    return polygons
