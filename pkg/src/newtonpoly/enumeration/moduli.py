"""
Moduli-dimension tables, exceptional polygons and corpus bound checks.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from newtonpoly.analysis.columns import column_count
from newtonpoly.analysis.hulls import interior_hull, relax
from newtonpoly.core.errors import NotApplicableError
from newtonpoly.enumeration.enumerator import (
    GenusCorpus,
    enumerate_by_genus,
    maximal_nonhyperelliptic,
    subpolygons_with_interior,
)
from newtonpoly.lattice.geometry import LatticePolygon, polygon_key, standard_simplex
from newtonpoly.lattice.transforms import is_equivalent, lattice_width
from newtonpoly.loops.legal_loops import loop_of_polytope, verify_twelve

logger = logging.getLogger(__name__)


def claimed_dim(g: int) -> int:
    """min(2g + 1, 3g - 3), except 16 at genus 7."""
    if g == 7:
        return 16
    return min(2 * g + 1, 3 * g - 3)


def m_value(polygon: LatticePolygon) -> int:
    return len(polygon.lattice_points) - column_count(polygon) - 3


@dataclass
class ModuliRow:
    g: int
    max_m_maximal_nonhyp: Optional[int]
    hyperelliptic_dim: int
    claimed_dim: int
    witnesses: List[LatticePolygon] = field(default_factory=list)

    @property
    def nondegenerate_dim(self) -> int:
        """Largest of the hyperelliptic dimension and the nonhyperelliptic bound."""
        if self.max_m_maximal_nonhyp is None:
            return self.hyperelliptic_dim
        return max(self.hyperelliptic_dim, self.max_m_maximal_nonhyp)

    @property
    def consistent(self) -> bool:
        return self.nondegenerate_dim == self.claimed_dim

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "max_m_maximal_nonhyp": self.max_m_maximal_nonhyp,
            "hyperelliptic_dim": self.hyperelliptic_dim,
            "claimed_dim": self.claimed_dim,
            "nondegenerate_dim": self.nondegenerate_dim,
            "consistent": self.consistent,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def moduli_row(g: int) -> ModuliRow:
    """
    Largest m over maximal nonhyperelliptic polygons of genus g, with witnesses.

    Maximal nonhyperelliptic polygons are exactly the integral relaxations
    of the two-dimensional interior hull candidates, so the full corpus is
    not needed here.
    """
    maximal = maximal_nonhyperelliptic(g)
    best: Optional[int] = None
    witnesses: List[LatticePolygon] = []
    for polygon in maximal:
        m = m_value(polygon)
        if best is None or m > best:
            best, witnesses = m, [polygon]
        elif m == best:
            witnesses.append(polygon)
    return ModuliRow(
        g=g,
        max_m_maximal_nonhyp=best,
        hyperelliptic_dim=2 * g - 1,
        claimed_dim=claimed_dim(g),
        witnesses=witnesses,
    )


def moduli_table(g_max: int, max_genus: int = 10) -> List[ModuliRow]:
    """
    One ModuliRow per genus 2 .. g_max.

    Raises:
        NotApplicableError: If g_max is below 2 or above ``max_genus``
    """
    if g_max < 2 or g_max > max_genus:
        raise NotApplicableError(f"g_max must lie in [2, {max_genus}], got {g_max}")
    rows = []
    for g in range(2, g_max + 1):
        row = moduli_row(g)
        logger.info(f"Genus {g}: max m = {row.max_m_maximal_nonhyp}, claimed {row.claimed_dim}")
        rows.append(row)
    return rows


def polygons_with_g1_one(show_progress: bool = False) -> List[LatticePolygon]:
    """Every polygon whose interior hull has exactly one interior lattice point, canonical."""
    keys = set()
    for hull in enumerate_by_genus(1, show_progress=show_progress):
        relaxed = relax(hull)
        if not isinstance(relaxed, LatticePolygon):
            continue
        keys |= subpolygons_with_interior(relaxed)
    return sorted((LatticePolygon(k) for k in keys), key=polygon_key)


def exceptional_g1_polytopes() -> List[LatticePolygon]:
    """Polygons with g1 = 1 and m = 2g + 2."""
    return [p for p in polygons_with_g1_one() if m_value(p) == 2 * p.genus + 2]


class Genus0Class(str, enum.Enum):
    MULTIPLE_OF_2SIGMA = "multiple_of_2Sigma"
    WIDTH_LE_1 = "width_le_1"


def genus0_classifier(polygon: LatticePolygon) -> Genus0Class:
    """
    A genus-0 polygon is equivalent to 2*Sigma or has lattice width at most one.

    Raises:
        NotApplicableError: For polygons with interior lattice points
    """
    if polygon.genus != 0:
        raise NotApplicableError(f"Expected genus 0, got {polygon.genus}")
    if is_equivalent(polygon, standard_simplex(2)):
        return Genus0Class.MULTIPLE_OF_2SIGMA
    width = lattice_width(polygon)
    assert width <= 1, f"Genus-0 polygon {polygon} has width {width} and is not 2*Sigma"
    return Genus0Class.WIDTH_LE_1


def _is_dilated_simplex(polygon: LatticePolygon) -> bool:
    if len(polygon.vertices) != 3:
        return False
    d = polygon.boundary_count // 3
    return d * 3 == polygon.boundary_count and is_equivalent(polygon, standard_simplex(d))


def verify_corpus_bounds(corpus: GenusCorpus) -> List[str]:
    """
    Check the bound suite on every class of a corpus.

    Pick's formula and the genus for all classes; Haase-Schicho
    r <= r1 + 9 (equality only at d*Sigma) and the point bound 2g + 8 - g1
    away from d*Sigma for nonhyperelliptic classes; m <= 2g + 2 when g1 = 1;
    r - r1 - c <= 6 and the twelve identity for maximal nonhyperelliptic
    classes, plus m <= 2g + 3 - g1 for those with g1 >= 2.

    Returns:
        Human-readable violations; empty when every bound holds
    """
    violations = []
    g = corpus.genus
    for polygon in corpus:
        points = len(polygon.lattice_points)
        r = polygon.boundary_count
        if polygon.genus != g:
            violations.append(f"{polygon}: genus {polygon.genus} != {g}")
        if polygon.twice_area != 2 * polygon.genus + r - 2:
            violations.append(f"{polygon}: Pick's formula fails")

        hull = interior_hull(polygon)
        if hull.dimension < 2:
            continue

        r1, g1 = hull.boundary_count, hull.genus
        simplex = _is_dilated_simplex(polygon)
        if r > r1 + 9 or (r == r1 + 9) != simplex:
            violations.append(f"{polygon}: r={r}, r1={r1} breaks r <= r1 + 9")
        if not simplex and points > 2 * g + 8 - g1:
            violations.append(f"{polygon}: {points} points exceeds 2g + 8 - g1")

        c = column_count(polygon)
        m = points - c - 3
        if g1 == 1 and m > 2 * g + 2:
            violations.append(f"{polygon}: m={m} exceeds 2g + 2")

        if relax(hull.polygon) != polygon:
            continue
        if r - r1 - c > 6:
            violations.append(f"{polygon}: r - r1 - c = {r - r1 - c} exceeds 6")
        if g1 >= 2 and m > 2 * g + 3 - g1:
            violations.append(f"{polygon}: m={m} exceeds 2g + 3 - g1")
        twelve = verify_twelve(loop_of_polytope(polygon))
        if not twelve.holds:
            violations.append(f"{polygon}: twelve identity fails {twelve}")

    for message in violations:
        logger.warning(message)
    return violations
