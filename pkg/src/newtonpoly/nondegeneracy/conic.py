"""
The principal A-determinant of the full conic support over F_p.

For f = c00 + c10 x + c01 y + c20 x^2 + c11 xy + c02 y^2 it factors as
the three vertex coefficients, the three edge discriminants and the
determinant of the symmetric matrix of the quadratic form; f is
nondegenerate exactly when the product is nonzero.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from sympy.polys.domains import GF

from newtonpoly.core.errors import InvalidInputError
from newtonpoly.nondegeneracy.laurent import LaurentPolynomial, check_prime

FACTOR_NAMES = (
    "c00",
    "c02",
    "c20",
    "c11^2-4c02c20",
    "c10^2-4c00c20",
    "c01^2-4c00c02",
    "D",
)

CONIC_EXPONENTS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


@dataclass(frozen=True)
class ConicDeterminant:
    p: int
    factors: Tuple[int, ...]
    value: int

    def to_json(self) -> Dict:
        return {
            "p": self.p,
            "factors": dict(zip(FACTOR_NAMES, self.factors)),
            "value": self.value,
        }


def conic_ea(c00: int, c10: int, c01: int, c20: int, c11: int, c02: int, p: int) -> ConicDeterminant:
    """
    Evaluate the seven factors and their product mod p.

    Raises:
        InvalidInputError: For p = 2, where the constant 4 vanishes, or a non-prime p
    """
    check_prime(p)
    if p == 2:
        raise InvalidInputError("The conic factorization is not valid in characteristic 2")

    field = GF(p, symmetric=False)
    c00, c10, c01, c20, c11, c02 = (field(c) for c in (c00, c10, c01, c20, c11, c02))
    four = field(4)
    d = four * c00 * c20 * c02 - c00 * c11**2 - c10**2 * c02 - c01**2 * c20 + c10 * c01 * c11
    factors = (
        c00,
        c02,
        c20,
        c11**2 - four * c02 * c20,
        c10**2 - four * c00 * c20,
        c01**2 - four * c00 * c02,
        d,
    )
    value = field.one
    for factor in factors:
        value *= factor
    return ConicDeterminant(p, tuple(int(v) for v in factors), int(value))


def conic_polynomial(coefficients: Tuple[int, int, int, int, int, int], p: int) -> LaurentPolynomial:
    """The conic with coefficients ordered c00, c10, c01, c20, c11, c02."""
    return LaurentPolynomial.from_terms(p, zip(CONIC_EXPONENTS, coefficients))


def conic_ea_of(f: LaurentPolynomial) -> ConicDeterminant:
    """E_A of a polynomial supported in 2*Sigma; missing coefficients count as zero."""
    return conic_ea(*(f.coefficient(e) for e in CONIC_EXPONENTS), p=f.p)
