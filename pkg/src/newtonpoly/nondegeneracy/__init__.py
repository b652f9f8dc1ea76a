"""
Nondegeneracy of Laurent polynomials over prime fields.
"""

from .checker import (
    FaceVerdict,
    NondegeneracyResult,
    face_restriction,
    genus_of_model,
    is_nondegenerate,
)
from .conic import ConicDeterminant, conic_ea
from .laurent import (
    LaurentPolynomial,
    format_polynomial,
    hyperelliptic_model,
    newton_polytope,
    parse_polynomial,
    transform_polynomial,
)
from .oracle import FaceSolution, brute_force_face_check
from .translation import find_nondegenerate_translation, translation_field_bound, triangle_field_bound

__all__ = [
    "ConicDeterminant",
    "FaceSolution",
    "FaceVerdict",
    "LaurentPolynomial",
    "NondegeneracyResult",
    "brute_force_face_check",
    "conic_ea",
    "face_restriction",
    "find_nondegenerate_translation",
    "format_polynomial",
    "genus_of_model",
    "hyperelliptic_model",
    "is_nondegenerate",
    "newton_polytope",
    "parse_polynomial",
    "transform_polynomial",
    "translation_field_bound",
    "triangle_field_bound",
]
