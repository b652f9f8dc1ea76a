"""
Tests for the moduli table, exceptional polygons and corpus bound checks.
"""

import pytest

from newtonpoly.analysis.catalog import HEXAGON_G7, trigonal_witness
from newtonpoly.analysis.hulls import is_maximal
from newtonpoly.core.errors import NotApplicableError
from newtonpoly.enumeration.enumerator import corpus_from_polygons, enumerate_by_genus
from newtonpoly.enumeration.moduli import (
    Genus0Class,
    claimed_dim,
    exceptional_g1_polytopes,
    genus0_classifier,
    m_value,
    moduli_row,
    moduli_table,
    verify_corpus_bounds,
)
from newtonpoly.lattice.geometry import LatticePolygon, standard_simplex
from newtonpoly.lattice.transforms import is_equivalent


@pytest.mark.parametrize("g,expected", [(2, 3), (3, 6), (4, 9), (5, 11), (6, 13), (7, 16), (8, 17)])
def test_claimed_dim(g, expected):
    assert claimed_dim(g) == expected


class TestModuliTable:
    def test_low_genus_rows(self, square):
        rows = moduli_table(4)
        assert [row.g for row in rows] == [2, 3, 4]
        assert [row.nondegenerate_dim for row in rows] == [3, 6, 9]
        assert all(row.consistent for row in rows)

        g2, g3, g4 = rows
        assert g2.max_m_maximal_nonhyp is None
        assert g3.max_m_maximal_nonhyp == 6
        assert len(g4.witnesses) == 1
        assert is_equivalent(g4.witnesses[0], square)

    def test_row_json(self):
        data = moduli_row(3).to_json()
        assert data["g"] == 3
        assert data["hyperelliptic_dim"] == 5
        assert data["nondegenerate_dim"] == 6
        assert data["consistent"] is True
        assert data["witnesses"] == [{"vertices": [[0, 0], [4, 0], [0, 4]]}]

    @pytest.mark.parametrize("g_max", [1, 11])
    def test_range_checked(self, g_max):
        with pytest.raises(NotApplicableError):
            moduli_table(g_max)


@pytest.mark.slow
def test_moduli_maxima_up_to_genus_seven():
    rows = {row.g: row for row in moduli_table(7)}
    assert {g: row.max_m_maximal_nonhyp for g, row in rows.items() if g >= 3} == {
        3: 6,
        4: 9,
        5: 11,
        6: 13,
        7: 16,
    }
    assert all(row.consistent for row in rows.values())
    for g in (5, 6, 7):
        assert any(is_equivalent(w, trigonal_witness(g)) for w in rows[g].witnesses)


@pytest.mark.slow
def test_exceptional_polygons():
    polygons = exceptional_g1_polytopes()
    assert len(polygons) == 5
    assert all(m_value(p) == 2 * p.genus + 2 for p in polygons)
    maximal = [p for p in polygons if is_maximal(p)]
    assert len(maximal) == 1
    assert is_equivalent(maximal[0], HEXAGON_G7)


class TestGenus0:
    def test_double_simplex(self):
        assert genus0_classifier(standard_simplex(2).translate((2, 2))) == Genus0Class.MULTIPLE_OF_2SIGMA

    @pytest.mark.parametrize(
        "polygon",
        [
            standard_simplex(1),
            LatticePolygon(((0, 0), (5, 0), (0, 1))),
            LatticePolygon(((0, 0), (3, 0), (3, 1), (0, 1))),
            LatticePolygon(((0, 0), (4, 0), (2, 1), (1, 1))),
        ],
    )
    def test_width_one(self, polygon):
        assert genus0_classifier(polygon) == Genus0Class.WIDTH_LE_1

    def test_positive_genus_rejected(self, quartic):
        with pytest.raises(NotApplicableError):
            genus0_classifier(quartic)


class TestCorpusBounds:
    @pytest.mark.parametrize("g", [1, 2])
    def test_small_corpora_pass(self, g):
        assert verify_corpus_bounds(enumerate_by_genus(g)) == []

    def test_maximal_nonhyperelliptic_pass(self, quartic, square):
        corpus = corpus_from_polygons(3, [quartic], "manual")
        assert verify_corpus_bounds(corpus) == []
        assert verify_corpus_bounds(corpus_from_polygons(4, [square], "manual")) == []

    def test_wrong_genus_reported(self, quartic):
        corpus = corpus_from_polygons(2, [quartic], "manual")
        violations = verify_corpus_bounds(corpus)
        assert len(violations) == 1
        assert "genus 3 != 2" in violations[0]

    @pytest.mark.slow
    @pytest.mark.parametrize("g", [3, 4, 5, 6, 7])
    def test_larger_corpora_pass(self, g):
        assert verify_corpus_bounds(enumerate_by_genus(g)) == []

    def test_loops_with_repeated_vectors_pass(self):
        trapezoid = LatticePolygon(((0, 0), (1, 0), (7, 3), (0, 3)))
        pentagon = LatticePolygon(((0, 0), (1, 0), (5, 2), (3, 4), (2, 4)))
        assert verify_corpus_bounds(corpus_from_polygons(6, [trapezoid], "manual")) == []
        assert verify_corpus_bounds(corpus_from_polygons(7, [pentagon, HEXAGON_G7], "manual")) == []
