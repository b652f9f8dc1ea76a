"""
Tests for extension field arithmetic and the brute-force face oracle.
"""

import numpy as np
import pytest

from newtonpoly.core.errors import InvalidInputError
from newtonpoly.lattice.geometry import LatticePoint, LatticePolygon, LatticeSegment
from newtonpoly.nondegeneracy.checker import faces_of, is_nondegenerate
from newtonpoly.nondegeneracy.extension_field import ExtensionField, extension_field, smallest_irreducible
from newtonpoly.nondegeneracy.laurent import LaurentPolynomial, format_polynomial, newton_polytope, parse_polynomial
from newtonpoly.nondegeneracy.oracle import FaceSolution, brute_force_face_check


class TestSmallestIrreducible:
    @pytest.mark.parametrize(
        "p,m,expected",
        [(5, 1, [1, 0]), (2, 2, [1, 1, 1]), (3, 2, [1, 0, 1]), (2, 3, [1, 0, 1, 1])],
    )
    def test_values(self, p, m, expected):
        assert smallest_irreducible(p, m) == expected

    def test_rejects_degree_zero(self):
        with pytest.raises(InvalidInputError):
            smallest_irreducible(3, 0)


class TestExtensionField:
    @pytest.mark.parametrize("p,m", [(2, 1), (5, 1), (2, 3), (3, 2), (5, 2)])
    def test_log_tables_cover_the_group(self, p, m):
        field = ExtensionField(p, m)
        elements = field.nonzero_elements()
        assert sorted(field.exp[: field.order - 1]) == list(elements)
        assert np.array_equal(field.exp[field.log[elements]], elements)

    def test_prime_field_matches_integers(self):
        field = extension_field(7, 1)
        a, b = np.meshgrid(np.arange(7), np.arange(7))
        assert np.array_equal(field.mul(a, b), (a * b) % 7)
        assert np.array_equal(field.add(a, b), (a + b) % 7)

    def test_addition_is_digitwise(self):
        field = extension_field(3, 2)
        assert field.add(4, 5) == 6
        assert field.add(3, 6) == 0

    def test_field_axioms(self):
        field = extension_field(3, 2)
        a, b, c = np.meshgrid(np.arange(9), np.arange(9), np.arange(9), indexing="ij")
        left = field.mul(a, field.add(b, c))
        right = field.add(field.mul(a, b), field.mul(a, c))
        assert np.array_equal(left, right)
        assert np.array_equal(field.mul(a, b), field.mul(b, a))

    def test_x_squared_is_minus_one(self):
        # F_9 = F_3[x] / (x^2 + 1); x is encoded as 3 and -1 as 2
        field = extension_field(3, 2)
        assert field.mul(3, 3) == 2

    def test_power_by_log_handles_negative_exponents(self):
        field = extension_field(5, 2)
        x = 7
        inverse = field.power_by_log(1, field.log[x], -1, 0, 0)
        assert field.mul(x, inverse) == 1


class TestBruteForce:
    def test_degenerate_edge_found_over_base_field(self):
        f = parse_polynomial("p=7; 1:2,0; 2:1,0; 1:0,0; 1:0,1")
        solution = brute_force_face_check(f, LatticeSegment((0, 0), (2, 0)))
        assert solution == FaceSolution(1, 6, 1)
        assert solution.to_json() == {"degree": 1, "x": 6, "y": 1}

    def test_singular_point_found(self):
        f = parse_polynomial("p=5; 2:0,0; 3:1,0; 3:0,1; 1:2,0; 1:0,2")
        polygon = newton_polytope(f)
        assert brute_force_face_check(f, polygon) == FaceSolution(1, 1, 1)

    def test_nondegenerate_faces_have_no_solution(self):
        f = parse_polynomial("p=5; 1:0,2; 4:3,0; 4:1,0")
        for face in faces_of(newton_polytope(f)):
            assert brute_force_face_check(f, face, m_max=2) is None

    def test_vertex_never_vanishes(self):
        f = parse_polynomial("p=3; 1:0,0; 1:1,0; 1:0,1")
        assert brute_force_face_check(f, LatticePoint(0, 0)) is None

    def test_solution_needs_extension(self):
        # x^2 + 1 has no root in F_3 but two in F_9
        f = parse_polynomial("p=3; 1:2,0; 1:0,0; 1:0,1")
        edge = LatticeSegment((0, 0), (2, 0))
        assert brute_force_face_check(f, edge, m_max=2) is None
        assert is_nondegenerate(f).nondegenerate

        squared = parse_polynomial("p=3; 1:4,0; 2:2,0; 1:0,0; 1:0,1")
        solution = brute_force_face_check(squared, LatticeSegment((0, 0), (4, 0)), m_max=2)
        assert solution is not None
        assert solution.degree == 2

    def test_agrees_with_checker(self):
        f = parse_polynomial("p=7; 1:2,0; 2:1,0; 1:0,0; 1:0,1")
        polygon = LatticePolygon(((0, 0), (2, 0), (0, 1)))
        result = is_nondegenerate(f)
        for face, verdict in zip(faces_of(polygon), result.verdicts):
            found = brute_force_face_check(f, face, m_max=1)
            assert (found is None) == verdict.nondegenerate

    def test_rejects_non_faces_and_bad_degree(self):
        f = parse_polynomial("p=7; 1:2,0; 2:1,0; 1:0,0; 1:0,1")
        with pytest.raises(InvalidInputError):
            brute_force_face_check(f, LatticePoint(1, 0))
        with pytest.raises(InvalidInputError):
            brute_force_face_check(f, LatticePoint(0, 0), m_max=0)


def random_polynomials(rng, p, count, box=2):
    """Random polynomials on [0, box]^2 with a two-dimensional Newton polygon."""
    exponents = [(i, j) for i in range(box + 1) for j in range(box + 1)]
    found = 0
    while found < count:
        coefficients = rng.integers(0, p, size=len(exponents))
        f = LaurentPolynomial.from_terms(p, [(e, int(c)) for e, c in zip(exponents, coefficients)])
        if not f.is_zero() and isinstance(newton_polytope(f), LatticePolygon):
            found += 1
            yield f


def assert_oracle_consistent(f, m_max):
    result = is_nondegenerate(f)
    for verdict in result.verdicts:
        found = brute_force_face_check(f, verdict.face, m_max=m_max)
        # a point over F_{p^k} certifies degeneracy; the converse may need a larger field
        if found is not None:
            assert not verdict.nondegenerate, (format_polynomial(f), verdict.face, found)


@pytest.mark.parametrize("p", [3, 5])
def test_random_polynomials_never_contradict_checker(p):
    rng = np.random.default_rng(7 * p)
    for f in random_polynomials(rng, p, 25):
        assert_oracle_consistent(f, m_max=2)


@pytest.mark.slow
@pytest.mark.parametrize("p", [3, 5, 7])
def test_many_random_polynomials_never_contradict_checker(p):
    rng = np.random.default_rng(11 * p)
    for f in random_polynomials(rng, p, 300, box=3):
        assert_oracle_consistent(f, m_max=2)
