"""Caractères gradués, formule fermionique et polynômes de Kostka"""

from .character import ClassicalCharacter, GradedCharacter
from .classical import GTPattern, classical_character, enum_gt_patterns, weyl_dim
from .fermionic import character_from_basis, fermionic_character, fermionic_terms, sl2_graded_dimension
from .tableau import Tableau, charge, enum_ssyt
from .kostka import kostka, kostka_number
from .decompose import decompose_graded, recompose
from .checks import (
    KOSTKA_READINGS,
    RESOLVED_READING,
    expected_kostka,
    resolve_kostka_reading,
    select_reading,
    verify_demazure_factorization,
    verify_dimension,
    verify_fermionic_vs_basis,
    verify_grade_zero,
    verify_kostka,
    verify_weyl_symmetry,
)

__all__ = [
    "ClassicalCharacter",
    "GradedCharacter",
    "GTPattern",
    "Tableau",
    "classical_character",
    "enum_gt_patterns",
    "weyl_dim",
    "fermionic_character",
    "fermionic_terms",
    "character_from_basis",
    "sl2_graded_dimension",
    "charge",
    "enum_ssyt",
    "kostka",
    "kostka_number",
    "decompose_graded",
    "recompose",
    "KOSTKA_READINGS",
    "RESOLVED_READING",
    "expected_kostka",
    "resolve_kostka_reading",
    "select_reading",
    "verify_kostka",
    "verify_demazure_factorization",
    "verify_fermionic_vs_basis",
    "verify_dimension",
    "verify_grade_zero",
    "verify_weyl_symmetry",
]
