"""
Enumeration of lattice polygons with a prescribed genus.

The production path (``hull_recursion``) builds nonhyperelliptic classes
top-down from maximal polygons, which are the relaxations of candidate
interior hulls, and hyperelliptic classes by a search over the strip
0 <= y <= 2. The ``bounded_box`` path is an independent oracle that grows
every polygon up to Scott's point bound and keeps those of genus g.
"""

import logging
import time
from dataclasses import dataclass
from typing import Iterable, List, Set, Tuple

from joblib import Parallel, delayed

from newtonpoly.analysis.hulls import NOT_LATTICE, relax
from newtonpoly.core.errors import NotApplicableError
from newtonpoly.enumeration.growth import CanonicalKey, grow_levels, polygons_with_point_count
from newtonpoly.lattice.geometry import LatticePolygon, convex_hull, polygon_key, standard_simplex
from newtonpoly.lattice.transforms import canonical_form

logger = logging.getLogger(__name__)

METHODS = ("hull_recursion", "bounded_box")

DEFAULT_MAX_GENUS = 10


@dataclass(frozen=True)
class GenusCorpus:
    """Pairwise inequivalent canonical polygons of one genus, sorted."""

    genus: int
    classes: Tuple[LatticePolygon, ...]
    provenance: str

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    @property
    def keys(self) -> Set[CanonicalKey]:
        return {p.vertices for p in self.classes}


def subpolygons_with_interior(polygon: LatticePolygon) -> Set[CanonicalKey]:
    """
    Canonical keys of every sub-polygon sharing the interior lattice points of ``polygon``.

    Walks down from ``polygon`` by deleting one vertex at a time and taking
    the hull of the remaining lattice points, keeping only hulls with the
    same interior point count. Any such sub-polygon is reachable this way.
    """
    genus = polygon.genus
    stack = [polygon]
    seen = {polygon.vertices}
    found: Set[CanonicalKey] = set()
    while stack:
        current = stack.pop()
        found.add(canonical_form(current)[0].vertices)
        points = current.lattice_points
        for vertex in current.vertices:
            smaller = convex_hull(points - {vertex})
            if not isinstance(smaller, LatticePolygon) or smaller.vertices in seen:
                continue
            if smaller.genus != genus:
                continue
            seen.add(smaller.vertices)
            stack.append(smaller)
    return found


def _classes_over_candidate(candidate: LatticePolygon) -> Set[CanonicalKey]:
    relaxed = relax(candidate)
    if relaxed is NOT_LATTICE:
        return set()
    return subpolygons_with_interior(relaxed)


def maximal_nonhyperelliptic(g: int) -> List[LatticePolygon]:
    """Maximal polygons of genus g with a two-dimensional interior hull, canonical and sorted."""
    result = {}
    for candidate in polygons_with_point_count(g) if g >= 3 else ():
        relaxed = relax(candidate)
        if relaxed is NOT_LATTICE:
            continue
        canonical = canonical_form(relaxed)[0]
        result[canonical.vertices] = canonical
    return sorted(result.values(), key=polygon_key)


def strip_polygons(g: int) -> Set[CanonicalKey]:
    """
    Canonical keys of polygons whose interior points are (0,1), ..., (g-1,1).

    Such polygons lie in 0 <= y <= 2 for g >= 2, and for g = 1 this covers
    every polygon of lattice width two. Rows y = 0 and y = 2 span [0, b0]
    and [a2, b2] after a shear fixing y = 1; optional vertices (-1, 1) and
    (g, 1) close off the middle row.
    """
    found: Set[CanonicalKey] = set()
    for left in (False, True):
        for right in (False, True):
            for a2 in range(-2, 2 * g + 1):
                if not left and a2 not in (-2, -1):
                    continue
                if left and a2 < -1:
                    continue
                for b0 in range(0, 2 * g + 3):
                    for b2 in range(a2, 2 * g - b0 + 1):
                        total = b0 + b2
                        if not right and total not in (2 * g - 1, 2 * g):
                            continue
                        if right and total > 2 * g - 1:
                            continue
                        points = [(0, 0), (b0, 0), (a2, 2), (b2, 2)]
                        if left:
                            points.append((-1, 1))
                        if right:
                            points.append((g, 1))
                        hull = convex_hull(points)
                        if not isinstance(hull, LatticePolygon):
                            continue
                        if hull.interior_lattice_points != {(x, 1) for x in range(g)}:
                            continue
                        found.add(canonical_form(hull)[0].vertices)
    return found


def _hull_recursion(g: int, n_jobs: int, show_progress: bool) -> Set[CanonicalKey]:
    keys = strip_polygons(g)
    if g == 1:
        keys.add(canonical_form(standard_simplex(3))[0].vertices)
    if g >= 3:
        candidates = polygons_with_point_count(g)
        logger.info(f"Relaxing {len(candidates)} interior hull candidates for genus {g}")
        batches = Parallel(n_jobs=n_jobs, verbose=10 if show_progress else 0)(
            delayed(_classes_over_candidate)(candidate) for candidate in candidates
        )
        for batch in batches:
            keys |= batch
    return keys


def scott_point_bound(g: int) -> int:
    """Largest lattice point count of a polygon with g >= 1 interior points."""
    return 10 if g == 1 else 3 * g + 6


def _bounded_box(g: int, show_progress: bool) -> Set[CanonicalKey]:
    keys: Set[CanonicalKey] = set()
    for _, level in grow_levels(scott_point_bound(g), max_genus=g, show_progress=show_progress):
        keys.update(p.vertices for p in level if p.genus == g)
    return keys


def enumerate_by_genus(
    g: int,
    method: str = "hull_recursion",
    n_jobs: int = 1,
    show_progress: bool = False,
    max_genus: int = DEFAULT_MAX_GENUS,
) -> GenusCorpus:
    """
    All lattice polygons with exactly g interior lattice points, up to equivalence.

    Args:
        g: Genus (number of interior lattice points)
        method: "hull_recursion" or "bounded_box"
        n_jobs: joblib worker count for hull_recursion
        show_progress: Report progress on stderr
        max_genus: Largest genus accepted

    Returns:
        GenusCorpus sorted by (vertex count, canonical vertices)

    Raises:
        NotApplicableError: For g < 1, g above ``max_genus`` or an unknown method
    """
    if g < 1:
        raise NotApplicableError(
            "Genus 0 is excluded: the width-1 strips form an infinite family of classes"
        )
    if g > max_genus:
        raise NotApplicableError(f"Genus {g} exceeds the enumeration limit {max_genus}")
    if method not in METHODS:
        raise NotApplicableError(f"Unknown enumeration method {method!r}, expected one of {METHODS}")

    start_time = time.time()
    if method == "hull_recursion":
        keys = _hull_recursion(g, n_jobs, show_progress)
    else:
        keys = _bounded_box(g, show_progress)

    classes = tuple(sorted((LatticePolygon(k) for k in keys), key=polygon_key))
    logger.info(
        f"Genus {g}: {len(classes)} classes via {method} in {time.time() - start_time:.2f}s"
    )
    return GenusCorpus(genus=g, classes=classes, provenance=method)


def corpus_from_polygons(g: int, polygons: Iterable[LatticePolygon], provenance: str) -> GenusCorpus:
    """Canonicalize, dedupe and sort arbitrary polygons into a corpus."""
    keys = {canonical_form(p)[0].vertices for p in polygons}
    classes = tuple(sorted((LatticePolygon(k) for k in keys), key=polygon_key))
    return GenusCorpus(genus=g, classes=classes, provenance=provenance)
