"""
Genus-indexed enumeration of lattice polygons and moduli tables.
"""

from .enumerator import GenusCorpus, enumerate_by_genus, maximal_nonhyperelliptic
from .growth import polygons_with_point_count
from .moduli import (
    ModuliRow,
    exceptional_g1_polytopes,
    genus0_classifier,
    moduli_table,
    verify_corpus_bounds,
)

__all__ = [
    "GenusCorpus",
    "ModuliRow",
    "enumerate_by_genus",
    "exceptional_g1_polytopes",
    "genus0_classifier",
    "maximal_nonhyperelliptic",
    "moduli_table",
    "polygons_with_point_count",
    "verify_corpus_bounds",
]
