"""
Finite fields F_{p^m} for the brute-force oracle.

Elements are integers whose base-p digits are the coefficients of a
residue class modulo the lexicographically smallest monic irreducible
polynomial of degree m, so F_p sits inside as 0 .. p - 1. Multiplication
goes through exp/log tables over a primitive element; addition is
digitwise mod p. Both work on numpy arrays.
"""

import itertools
import logging
from functools import lru_cache
from typing import List, Optional

import numpy as np
from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem

from newtonpoly.core.errors import InvalidInputError

logger = logging.getLogger(__name__)


def smallest_irreducible(p: int, m: int) -> List[int]:
    """
    Lexicographically smallest monic irreducible of degree m over F_p.

    Returned as a dense coefficient list from the leading term down, the
    convention of ``sympy.polys.galoistools``.
    """
    if m < 1:
        raise InvalidInputError(f"Extension degree must be positive, got {m}")
    for tail in itertools.product(range(p), repeat=m):
        candidate = [1, *tail]
        if gf_irreducible_p(candidate, p, ZZ):
            return candidate
    raise AssertionError(f"No irreducible polynomial of degree {m} over F_{p}")


class ExtensionField:
    """
    F_{p^m} with table-driven arithmetic.

    Args:
        p: Prime characteristic
        m: Extension degree
        logger: Optional logger instance
    """

    def __init__(self, p: int, m: int, logger: Optional[logging.Logger] = None):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = smallest_irreducible(p, m)
        self.logger = logger or logging.getLogger(self.__class__.__name__)

        self.digits = np.array(
            [[(value // p**k) % p for k in range(m)] for value in range(self.order)], dtype=np.int64
        )
        self.weights = p ** np.arange(m, dtype=np.int64)

        generator = self._find_generator()
        self.exp = np.zeros(2 * (self.order - 1), dtype=np.int64)
        self.log = np.full(self.order, -1, dtype=np.int64)
        current = [1]
        for k in range(self.order - 1):
            value = self._encode(current)
            self.exp[k] = value
            self.log[value] = k
            current = gf_rem(gf_mul(current, generator, p, ZZ), self.modulus, p, ZZ)
        self.exp[self.order - 1 :] = self.exp[: self.order - 1]
        self.logger.debug(
            f"Built F_{p}^{m} with modulus {self.modulus} and generator {self._encode(generator)}"
        )

    def _decode(self, value: int) -> List[int]:
        coefficients = [(value // self.p**k) % self.p for k in range(self.m)]
        while len(coefficients) > 1 and coefficients[-1] == 0:
            coefficients.pop()
        return list(reversed(coefficients)) if any(coefficients) else []

    def _encode(self, coefficients: List[int]) -> int:
        value = 0
        for c in coefficients:
            value = value * self.p + int(c) % self.p
        return value

    def _find_generator(self) -> List[int]:
        group_order = self.order - 1
        cofactors = [group_order // q for q in factorint(group_order)] if group_order > 1 else []
        for value in range(1, self.order):
            candidate = self._decode(value)
            if all(
                gf_pow_mod(candidate, e, self.modulus, self.p, ZZ) != [1] for e in cofactors
            ):
                return candidate
        raise AssertionError(f"F_{self.p}^{self.m} has no primitive element")

    def nonzero_elements(self) -> np.ndarray:
        return np.arange(1, self.order, dtype=np.int64)

    def add(self, a, b):
        total = (self.digits[a] + self.digits[b]) % self.p
        return total @ self.weights

    def mul(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        product = self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, product)

    def power_by_log(self, coefficient: int, log_x, i: int, log_y, j: int):
        """c * x^i * y^j for nonzero c, x, y given by their logarithms; exponents may be negative."""
        index = self.log[coefficient] + i * log_x + j * log_y
        return self.exp[index % (self.order - 1)]

    def __repr__(self) -> str:
        return f"ExtensionField(p={self.p}, m={self.m})"


@lru_cache(maxsize=32)
def extension_field(p: int, m: int) -> ExtensionField:
    return ExtensionField(p, m)
