"""Énumération de la base B^r(λ) des modules de Weyl"""

from .element import BasisElement, PbwFactor, restrict_weight
from .enumeration import (
    colex_multisets,
    column_multiplicity,
    count_basis,
    count_enumerated,
    enum_basis,
    enum_ell_columns,
    enum_F,
    enum_V_basis,
    is_member_def1,
)
from .recursion import check_recursion, count_by_recursion
from .parallel import count_enumerated_parallel, map_subtrees

__all__ = [
    "PbwFactor",
    "BasisElement",
    "restrict_weight",
    "colex_multisets",
    "column_multiplicity",
    "enum_F",
    "enum_ell_columns",
    "enum_basis",
    "enum_V_basis",
    "count_basis",
    "count_enumerated",
    "count_by_recursion",
    "count_enumerated_parallel",
    "check_recursion",
    "is_member_def1",
    "map_subtrees",
]
