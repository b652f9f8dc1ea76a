"""
Named polygons and closed-form families.

Covers the low-genus summary polygons, the C_ab triangles with their
column vectors in closed form, pruned simplices, and the polygons
attaining the largest moduli bound for each genus >= 5.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set

from newtonpoly.analysis.hulls import interior_hull, maximal_closure
from newtonpoly.analysis.report import koelman_dim
from newtonpoly.core.errors import InvalidInputError, NotApplicableError
from newtonpoly.lattice.geometry import LatticePoint, LatticePolygon, convex_hull, standard_simplex

HEXAGON_G7 = LatticePolygon.from_vertices([(2, 0), (0, 2), (-2, 2), (-2, 0), (0, -2), (2, -2)])

OCTAGON = LatticePolygon.from_vertices(
    [(0, 1), (1, 0), (3, 0), (4, 1), (4, 3), (3, 4), (1, 4), (0, 3)]
)


def cab_triangle(a: int, b: int) -> LatticePolygon:
    """conv{(0,a),(b,0),(0,0)}: Newton polygon of C_ab curves."""
    if a < 1 or b < 1:
        raise InvalidInputError(f"Triangle legs must be positive, got a={a}, b={b}")
    return LatticePolygon(((0, 0), (b, 0), (0, a)))


def cab_genus(a: int, b: int) -> int:
    """Genus of cab_triangle(a, b) when a and b are coprime."""
    return (a - 1) * (b - 1) // 2


def cab_column_vectors(a: int, b: int) -> Set[LatticePoint]:
    """
    Closed-form column vectors of the C_ab triangle for coprime a, b >= 3.

    {(n, -1): 0 <= n <= b // a} together with {(-1, m): 0 <= m <= a // b}.
    """
    if a < 3 or b < 3:
        raise NotApplicableError(f"Closed form needs a, b >= 3, got a={a}, b={b}")
    vectors = {LatticePoint(n, -1) for n in range(b // a + 1)}
    vectors |= {LatticePoint(-1, m) for m in range(a // b + 1)}
    return vectors


def pruned_simplex(d: int, corners: Iterable[Sequence[int]] = ()) -> LatticePolygon:
    """
    d*Sigma with some of its corners cut off at lattice distance two.

    Args:
        d: Size of the simplex (at least 4 when pruning)
        corners: Subset of (0,0), (d,0), (0,d) to prune

    Returns:
        The pruned polygon
    """
    corners = {tuple(c) for c in corners}
    allowed = {(0, 0), (d, 0), (0, d)}
    if not corners <= allowed:
        raise InvalidInputError(f"Corners must be vertices of {d}*Sigma, got {sorted(corners)}")
    if corners and d < 4:
        raise InvalidInputError("Pruning needs d >= 4")

    def keep(p: LatticePoint) -> bool:
        if (0, 0) in corners and p.x + p.y < 2:
            return False
        if (d, 0) in corners and p.x > d - 2:
            return False
        if (0, d) in corners and p.y > d - 2:
            return False
        return True

    return convex_hull(p for p in standard_simplex(d).lattice_points if keep(p))


@dataclass(frozen=True)
class SummaryEntry:
    label: str
    description: str
    polygon: LatticePolygon
    dim: Optional[int]

    @property
    def genus(self) -> int:
        return self.polygon.genus

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "description": self.description,
            "genus": self.genus,
            "dim": self.dim,
            **self.polygon.to_json(),
        }


def summary_dimension(polygon: LatticePolygon) -> int:
    """
    Moduli dimension of a summary polygon.

    2g - 1 for hyperelliptic polygons, otherwise the Koelman dimension of
    the smallest maximal polygon containing it.
    """
    if interior_hull(polygon).dimension < 2:
        return 2 * polygon.genus - 1
    return koelman_dim(maximal_closure(polygon))


def summary_polytopes() -> List[SummaryEntry]:
    """Newton polygons modelling every curve of genus at most four."""
    entries = [
        ("a", "genus 0", standard_simplex(1), False),
        ("b", "genus 1", cab_triangle(2, 3), False),
        ("c", "genus 2", cab_triangle(2, 6), True),
        ("d", "genus 3 hyperelliptic", cab_triangle(2, 8), True),
        ("e", "genus 3 planar", standard_simplex(4), True),
        ("f", "genus 4 hyperelliptic", cab_triangle(2, 10), True),
        ("g", "genus 4 conical", cab_triangle(3, 6), True),
        ("h.1", "genus 4 hyperboloidal", pruned_simplex(5, [(5, 0), (0, 5)]), True),
        ("h.2", "genus 4 hyperboloidal, tangent", LatticePolygon(((0, 0), (3, 0), (3, 2), (1, 3), (0, 3))), False),
    ]
    return [
        SummaryEntry(label, description, polygon, summary_dimension(polygon) if with_dim else None)
        for label, description, polygon, with_dim in entries
    ]


def trigonal_witness(g: int) -> LatticePolygon:
    """
    Polygon of genus g >= 5 attaining the largest moduli bound.

    A 3-high rectangle for even g, a 3-high trapezium for odd g other
    than 7, and the hexagon for g = 7.
    """
    if g < 5:
        raise NotApplicableError(f"Witness family starts at genus 5, got {g}")
    if g == 7:
        return HEXAGON_G7
    h, odd = divmod(g, 2)
    if odd:
        return LatticePolygon.from_vertices([(0, 0), (0, 3), (h, 3), (h + 3, 0)])
    return LatticePolygon.from_vertices([(0, 0), (0, 3), (h + 1, 3), (h + 1, 0)])
