"""Oracle par force brute : produits de fusion de modules d'évaluation fondamentaux"""

from .module import GENERATOR_KINDS, EvaluationFactor, ExplicitModule, build_fundamental
from .echelon import EchelonBasis
from .action import current_action, tensor_weights, validate_factors, vandermonde_relation
from .closure import FilteredSpace, fusion_filtration, fusion_graded_character, point_independence, with_points
from .spec import FusionSpec, parse_fusion_spec, parse_points

__all__ = [
    "GENERATOR_KINDS",
    "ExplicitModule",
    "EvaluationFactor",
    "EchelonBasis",
    "FilteredSpace",
    "FusionSpec",
    "build_fundamental",
    "current_action",
    "tensor_weights",
    "validate_factors",
    "vandermonde_relation",
    "fusion_filtration",
    "fusion_graded_character",
    "point_independence",
    "with_points",
    "parse_fusion_spec",
    "parse_points",
]
