"""
Laurent polynomials over prime fields.

A polynomial is a prime p plus a finite map from exponent pairs to
nonzero residues mod p. Coefficients are stored as integers in [0, p);
sympy takes over whenever genuine polynomial arithmetic is needed.
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from sympy import Poly, isprime, symbols

from newtonpoly.core.errors import InvalidInputError, NotApplicableError
from newtonpoly.lattice.geometry import Hull, LatticePoint, as_point, convex_hull
from newtonpoly.lattice.transforms import UnimodularAffineMap

MAX_PRIME = 1 << 16

X, Y = symbols("x y")

_HEADER = re.compile(r"^p\s*=\s*(\d+)$")
_TERM = re.compile(r"^([+-]?\d+)\s*:\s*([+-]?\d+)\s*,\s*([+-]?\d+)$")


def check_prime(p: int, max_prime: int = MAX_PRIME) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise InvalidInputError(f"Field characteristic must be a prime, got {p!r}")
    if p >= max_prime:
        raise InvalidInputError(f"Prime {p} is above the supported limit {max_prime}")
    return p


@dataclass(frozen=True)
class LaurentPolynomial:
    """
    Sum of c_ij x^i y^j over F_p with finitely many nonzero c_ij.

    ``terms`` is sorted by exponent and holds no zero coefficients; build
    instances through :meth:`from_terms`, which reduces and merges.
    """

    p: int
    terms: Tuple[Tuple[LatticePoint, int], ...]

    @classmethod
    def from_terms(
        cls, p: int, terms: Iterable[Tuple[Sequence[int], int]], max_prime: int = MAX_PRIME
    ) -> "LaurentPolynomial":
        check_prime(p, max_prime)
        merged: Dict[LatticePoint, int] = {}
        for exponent, coefficient in terms:
            key = as_point(tuple(exponent))
            merged[key] = (merged.get(key, 0) + int(coefficient)) % p
        return cls(p, tuple(sorted((e, c) for e, c in merged.items() if c)))

    @classmethod
    def from_dict(cls, p: int, coefficients: Mapping[Sequence[int], int]) -> "LaurentPolynomial":
        return cls.from_terms(p, coefficients.items())

    @classmethod
    def from_sympy(cls, expr, p: int, shift: Sequence[int] = (0, 0)) -> "LaurentPolynomial":
        """Read a sympy polynomial in x, y, adding ``shift`` to every exponent."""
        poly = Poly(expr, X, Y, modulus=p)
        return cls.from_terms(
            p, (((i + shift[0], j + shift[1]), int(c)) for (i, j), c in poly.terms())
        )

    @cached_property
    def coefficients(self) -> Dict[LatticePoint, int]:
        return dict(self.terms)

    @property
    def support(self) -> Tuple[LatticePoint, ...]:
        return tuple(e for e, _ in self.terms)

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.coefficients.get(LatticePoint(*exponent), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def restrict(self, keep) -> "LaurentPolynomial":
        """Terms whose exponent satisfies the predicate ``keep``."""
        return LaurentPolynomial(self.p, tuple((e, c) for e, c in self.terms if keep(e)))

    def log_derivative(self, axis: int) -> "LaurentPolynomial":
        """x d/dx (axis 0) or y d/dy (axis 1); the support can only shrink."""
        return LaurentPolynomial.from_terms(self.p, ((e, e[axis] * c) for e, c in self.terms))

    def min_exponents(self) -> LatticePoint:
        if self.is_zero():
            return LatticePoint(0, 0)
        return LatticePoint(min(e.x for e in self.support), min(e.y for e in self.support))

    def to_sympy(self, shift: Optional[Sequence[int]] = None):
        """
        sympy expression of x^a y^b * f with (a, b) = ``shift``.

        Defaults to the shift clearing every negative exponent, which is a
        unit on the torus and so does not change any face condition.
        """
        if shift is None:
            shift = -self.min_exponents()
        return sum(
            (c * X ** (e.x + shift[0]) * Y ** (e.y + shift[1]) for e, c in self.terms),
            start=0,
        )

    def __str__(self) -> str:
        return format_polynomial(self)


def parse_polynomial(text: str, max_prime: int = MAX_PRIME) -> LaurentPolynomial:
    """
    Parse ``"p=7; 1:0,0; 1:1,0; 1:0,1"``.

    Terms are ``coefficient:i,j`` with possibly negative integers;
    whitespace is ignored and repeated exponents are summed.

    Raises:
        InvalidInputError: On any deviation from the grammar
    """
    chunks = [c.strip() for c in text.strip().strip(";").split(";")]
    if not chunks or not chunks[0]:
        raise InvalidInputError("Empty polynomial text")
    header = _HEADER.match(chunks[0])
    if header is None:
        raise InvalidInputError(f"Expected a 'p=<prime>' header, got {chunks[0]!r}")
    p = int(header.group(1))

    terms = []
    for chunk in chunks[1:]:
        match = _TERM.match(chunk)
        if match is None:
            raise InvalidInputError(f"Malformed term {chunk!r}, expected '<coeff>:<i>,<j>'")
        coefficient, i, j = (int(g) for g in match.groups())
        terms.append(((i, j), coefficient))
    return LaurentPolynomial.from_terms(p, terms, max_prime=max_prime)


def format_polynomial(f: LaurentPolynomial) -> str:
    """Inverse of :func:`parse_polynomial` (coefficients printed in [0, p))."""
    body = "; ".join(f"{c}:{e.x},{e.y}" for e, c in f.terms)
    return f"p={f.p}; {body}" if body else f"p={f.p}"


def newton_polytope(f: LaurentPolynomial) -> Hull:
    """
    Convex hull of the support, classified by dimension.

    Raises:
        NotApplicableError: For the zero polynomial
    """
    if f.is_zero():
        raise NotApplicableError("The zero polynomial has no Newton polytope")
    return convex_hull(f.support)


def transform_polynomial(f: LaurentPolynomial, m: UnimodularAffineMap) -> LaurentPolynomial:
    """Move every exponent vector by the unimodular map ``m``."""
    return LaurentPolynomial.from_terms(f.p, ((m(e), c) for e, c in f.terms))


def translate_variables(f: LaurentPolynomial, x0: int, y0: int) -> LaurentPolynomial:
    """
    f(x - x0, y - y0) for a polynomial f.

    Raises:
        NotApplicableError: If f has negative exponents
    """
    low = f.min_exponents()
    if low.x < 0 or low.y < 0:
        raise NotApplicableError(f"Translation needs a polynomial, {f} has negative exponents")
    expr = f.to_sympy(shift=(0, 0)).subs({X: X - x0, Y: Y - y0}, simultaneous=True)
    return LaurentPolynomial.from_sympy(expr.expand(), f.p)


def hyperelliptic_model(
    f_coefficients: Sequence[int], h_coefficients: Sequence[int], p: int
) -> LaurentPolynomial:
    """
    y^2 + h(x) y - f(x), coefficients listed from the constant term up.

    With deg f = 2g + 2 (or 2g + 1) and deg h <= g + 1 the support lies in
    conv{(0,0),(2g+2,0),(0,2)}.
    """
    terms = [((0, 2), 1)]
    terms += [((i, 1), c) for i, c in enumerate(h_coefficients)]
    terms += [((i, 0), -c) for i, c in enumerate(f_coefficients)]
    return LaurentPolynomial.from_terms(p, terms)
