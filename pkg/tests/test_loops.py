"""
Tests for legal moves, legal loops and the twelve identity.
"""

import pytest

from newtonpoly.analysis.catalog import HEXAGON_G7, trigonal_witness
from newtonpoly.core.errors import InvalidInputError, NotApplicableError
from newtonpoly.lattice.geometry import LatticePolygon, standard_simplex
from newtonpoly.loops.legal_loops import (
    LegalLoop,
    LegalMove,
    dual_loop,
    is_legal_move,
    loop_bounds,
    loop_equals_up_to_rotation,
    loop_length,
    loop_of_polytope,
    move_length,
    verify_twelve,
    winding_number,
)

SQUARE_LOOP = LegalLoop(((-1, -1), (1, -1), (1, 1), (-1, 1)))


class TestLegalMove:
    @pytest.mark.parametrize("v,w", [((1, 0), (0, 1)), ((1, 0), (2, 1)), ((1, 0), (1, 2)), ((1, 0), (3, 2))])
    def test_legal(self, v, w):
        assert is_legal_move(v, w)

    @pytest.mark.parametrize("v,w", [((2, 0), (0, 1)), ((1, 0), (2, 3)), ((1, 0), (-1, 0)), ((1, 0), (1, 0))])
    def test_illegal(self, v, w):
        assert not is_legal_move(v, w)

    def test_length_is_signed(self):
        assert move_length((1, 0), (0, 1)) == 1
        assert move_length((0, 1), (1, 0)) == -1
        assert LegalMove((1, 0), (1, 2)).length == 2

    def test_illegal_move_raises(self):
        with pytest.raises(InvalidInputError):
            move_length((1, 0), (2, 3))


class TestLegalLoop:
    def test_construction_validates(self):
        with pytest.raises(InvalidInputError):
            LegalLoop(((1, 0), (0, 1)))
        with pytest.raises(InvalidInputError):
            LegalLoop(((1, 0), (2, 3), (-1, -1)))

    def test_square_loop(self):
        assert loop_length(SQUARE_LOOP) == 8
        assert dual_loop(SQUARE_LOOP).vectors == ((1, 0), (0, 1), (-1, 0), (0, -1))
        assert loop_length(dual_loop(SQUARE_LOOP)) == 4
        assert winding_number(SQUARE_LOOP) == 1

    def test_twelve(self):
        check = verify_twelve(SQUARE_LOOP)
        assert check.to_json() == {"length": 8, "dual_length": 4, "winding": 1, "holds": True}

    def test_unimodular_square_loop(self):
        loop = LegalLoop(((1, 0), (0, 1), (-1, 0), (0, -1)))
        check = verify_twelve(loop)
        assert (check.length, check.dual_length, check.holds) == (4, 8, True)

    def test_clockwise_loop_winds_negatively(self):
        loop = LegalLoop(((1, 0), (0, -1), (-1, 0), (0, 1)))
        check = verify_twelve(loop)
        assert check.winding == -1
        assert check.holds

    def test_double_dual_is_rotation(self):
        for loop in (SQUARE_LOOP, loop_of_polytope(standard_simplex(4)), loop_of_polytope(HEXAGON_G7)):
            assert loop_equals_up_to_rotation(dual_loop(dual_loop(loop)), loop)

    def test_rotation_needs_equal_length(self):
        assert not loop_equals_up_to_rotation(SQUARE_LOOP, LegalLoop(((1, 0), (0, 1), (-1, -1))))


class TestLoopOfPolytope:
    def test_square(self, square):
        assert loop_of_polytope(square) == SQUARE_LOOP

    def test_quartic(self, quartic):
        loop = loop_of_polytope(quartic)
        assert loop.vectors == ((-1, -1), (2, -1), (-1, 2))
        assert verify_twelve(loop).to_json() == {"length": 9, "dual_length": 3, "winding": 1, "holds": True}

    @pytest.mark.parametrize("polygon", [HEXAGON_G7, standard_simplex(5), trigonal_witness(5), trigonal_witness(6)], ids=repr)
    def test_twelve_holds(self, polygon):
        assert verify_twelve(loop_of_polytope(polygon)).holds

    def test_rejects_non_maximal(self, pruned_quintic):
        with pytest.raises(NotApplicableError):
            loop_of_polytope(pruned_quintic)

    def test_rejects_degenerate_interior(self, simplex):
        with pytest.raises(NotApplicableError):
            loop_of_polytope(simplex)

    def test_bounds(self, square):
        assert loop_bounds(square) == {
            "r_minus_r1": 8,
            "loop_length": 8,
            "dual_length": 4,
            "c": 4,
            "r_minus_r1_minus_c": 4,
        }


def rotated_to(vectors, first):
    i = vectors.index(first)
    return vectors[i:] + vectors[:i]


# hull edges that keep their length under relaxation repeat a loop vector
FLAT_BOTTOM_TRAPEZOID = LatticePolygon(((0, 0), (1, 0), (7, 3), (0, 3)))
PENTAGON_G7 = LatticePolygon(((0, 0), (1, 0), (5, 2), (3, 4), (2, 4)))
QUADRILATERAL_G13 = LatticePolygon(((0, 1), (8, 1), (8, 3), (4, 5)))


class TestRepeatedLoopVectors:
    def test_trapezoid(self):
        assert FLAT_BOTTOM_TRAPEZOID.genus == 6
        loop = loop_of_polytope(FLAT_BOTTOM_TRAPEZOID)
        assert rotated_to(loop.vectors, (-1, -1)) == ((-1, -1), (3, 1), (-1, 1))
        assert rotated_to(dual_loop(loop).vectors, (2, 1)) == ((2, 1), (-1, 0), (0, -1))
        assert verify_twelve(loop).to_json() == {"length": 8, "dual_length": 4, "winding": 1, "holds": True}

    def test_pentagon(self):
        assert PENTAGON_G7.genus == 7
        loop = loop_of_polytope(PENTAGON_G7)
        assert rotated_to(loop.vectors, (-1, -1)) == ((-1, -1), (1, 0), (0, 1))
        assert verify_twelve(loop).to_json() == {"length": 3, "dual_length": 9, "winding": 1, "holds": True}

    @pytest.mark.parametrize("polygon", [FLAT_BOTTOM_TRAPEZOID, PENTAGON_G7], ids=repr)
    def test_length_matches_boundary_gap(self, polygon):
        bounds = loop_bounds(polygon)
        assert bounds["loop_length"] == bounds["r_minus_r1"]

    def test_loop_with_negative_move(self):
        assert QUADRILATERAL_G13.genus == 13
        loop = loop_of_polytope(QUADRILATERAL_G13)
        assert move_length((-1, 1), (0, 1)) == -1
        assert rotated_to(loop.vectors, (1, -1)) == ((1, -1), (1, 0), (-1, 1), (0, 1), (-2, -1))
        dual = dual_loop(loop)
        assert rotated_to(dual.vectors, (0, 1)) == ((0, 1), (-2, 1), (-1, 0), (-1, -1), (1, 0))
        assert verify_twelve(loop).to_json() == {"length": 6, "dual_length": 6, "winding": 1, "holds": True}
