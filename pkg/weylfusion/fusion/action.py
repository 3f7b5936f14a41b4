"""Action de x ⊗ t^s sur un produit tensoriel de modules d'évaluation"""

import itertools
import logging
from typing import List, Sequence

import sympy
from sympy import kronecker_product

from weylfusion.fusion.module import EvaluationFactor, Generator
from weylfusion.lattice import WeightVector
from weylfusion.utils.exceptions import InvalidFusionSpec

logger = logging.getLogger(__name__)


def validate_factors(factors: Sequence[EvaluationFactor]) -> None:
    """
    Raises:
        InvalidFusionSpec: Liste vide, rangs mélangés ou points répétés
    """
    if not factors:
        raise InvalidFusionSpec("Au moins un facteur est requis")
    ranks = {f.module.rank for f in factors}
    if len(ranks) > 1:
        raise InvalidFusionSpec(f"Facteurs de rangs différents: {sorted(ranks)}")
    points = [f.point for f in factors]
    if len(set(points)) != len(points):
        raise InvalidFusionSpec(f"Points d'évaluation répétés: {points}")


def ambient_dim(factors: Sequence[EvaluationFactor]) -> int:
    dim = 1
    for factor in factors:
        dim *= factor.module.dim
    return dim


def tensor_weights(factors: Sequence[EvaluationFactor]) -> List[WeightVector]:
    """Poids des vecteurs de la base produit, dans l'ordre du produit de Kronecker"""
    rank = factors[0].module.rank
    per_factor = [[f.module.weight_of(k) for k in range(f.module.dim)] for f in factors]
    weights = []
    for combination in itertools.product(*per_factor):
        total = WeightVector.zero(rank)
        for weight in combination:
            total = total + weight
        weights.append(total)
    return weights


def highest_tensor_index(factors: Sequence[EvaluationFactor]) -> int:
    """Indice de v_1 ⊗ ... ⊗ v_k dans la base produit"""
    index = 0
    for factor in factors:
        index = index * factor.module.dim + factor.module.highest_index
    return index


def current_action(factors: Sequence[EvaluationFactor], generator: Generator, s: int) -> sympy.Matrix:
    """
    Matrice de x ⊗ t^s : Σ_j a_j^s (1 ⊗ ... ⊗ ρ_j(x) ⊗ ... ⊗ 1)
    
    Args:
        factors: Modules d'évaluation (points distincts)
        generator: (type, i) avec type parmi "x+", "x-", "h"
        s: Degré en t (s = 0 donne l'action ordinaire du coproduit)
    """
    validate_factors(factors)
    dims = [f.module.dim for f in factors]
    total = sympy.zeros(ambient_dim(factors), ambient_dim(factors))
    for j, factor in enumerate(factors):
        coefficient = sympy.Integer(factor.point) ** s
        if coefficient == 0:
            continue
        parts = [sympy.eye(d) for d in dims]
        parts[j] = factor.module.generator(*generator)
        total += coefficient * (sympy.Matrix(kronecker_product(*parts)) if len(parts) > 1 else parts[0])
    return total


def vandermonde_relation(factors: Sequence[EvaluationFactor], generator: Generator) -> bool:
    """
    Vérifie que x ⊗ t^k (k = nombre de facteurs) est combinaison linéaire
    des x ⊗ t^s pour s < k, en tant qu'opérateurs
    """
    k = len(factors)
    size = ambient_dim(factors) ** 2
    lower = [current_action(factors, generator, s).reshape(size, 1) for s in range(k)]
    top = current_action(factors, generator, k).reshape(size, 1)
    base = sympy.Matrix.hstack(*lower)
    related = base.rank() == sympy.Matrix.hstack(base, top).rank()
    logger.debug(f"Relation de Vandermonde pour {generator} sur {k} facteur(s): {related}")
    return related
