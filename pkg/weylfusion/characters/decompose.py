"""Décomposition d'un caractère gradué en caractères irréductibles"""

import logging
from typing import Dict, List, Optional

from weylfusion.characters.character import GradedCharacter
from weylfusion.characters.classical import classical_character
from weylfusion.lattice import (
    Partition,
    WeightVector,
    dominates,
    lift_to_size,
    partition_to_weight,
    weight_to_partition,
)
from weylfusion.qpoly import QPoly
from weylfusion.utils.exceptions import DecompositionError, InvalidWeight

logger = logging.getLogger(__name__)


def _maximal_weight(weights: List[WeightVector]) -> WeightVector:
    """Poids maximal pour la dominance ; à égalité, le plus grand en ordre lexicographique"""
    maximal = [
        mu for mu in weights
        if not any(nu != mu and dominates(nu, mu) for nu in weights)
    ]
    return max(maximal, key=lambda w: w.coords)


def decompose_graded(character: GradedCharacter, size: Optional[int] = None) -> Dict[Partition, QPoly]:
    """
    Écrit ch = Σ_ξ c_ξ(t) · ch V(λ_ξ) par élimination triangulaire
    
    On retire successivement un poids maximal μ, de polynôme p, en soustrayant
    p · ch V(μ).
    
    Args:
        character: Caractère à décomposer
        size: Taille commune |ξ| des partitions clés (par défaut celle de ξ^μ
              pour le premier poids éliminé)
        
    Returns:
        Partition ξ (avec ξ_{r+2} = 0) -> c_ξ(t), coefficients positifs
        
    Raises:
        DecompositionError: Coefficient négatif, poids maximal non dominant,
                            ou poids non relevable à la taille commune
    """
    rank = character.rank
    remaining = character.table
    result: Dict[Partition, QPoly] = {}
    
    while remaining:
        mu = _maximal_weight(list(remaining))
        if not mu.is_dominant():
            raise DecompositionError(f"Poids maximal non dominant: {mu}")
        poly = remaining[mu]
        if not poly.is_nonnegative():
            raise DecompositionError(f"Coefficient négatif {poly} pour le poids {mu}")
        if size is None:
            size = weight_to_partition(mu.to_dominant()).size
        try:
            xi = lift_to_size(mu, size)
        except InvalidWeight as e:
            raise DecompositionError(e.message)
        result[xi] = poly
        logger.debug(f"Élimination de V({mu}) avec le coefficient {poly}")
        
        for weight, mult in classical_character(mu.to_dominant()).table.items():
            updated = remaining.get(weight, QPoly.zero()) - poly * mult
            if updated.is_zero():
                remaining.pop(weight, None)
            else:
                remaining[weight] = updated
    
    return result


def recompose(rank: int, decomposition: Dict[Partition, QPoly]) -> GradedCharacter:
    """Σ_ξ c_ξ(t) · ch V(λ_ξ), inverse de decompose_graded"""
    total = GradedCharacter(rank)
    for xi, poly in decomposition.items():
        irreducible = classical_character(partition_to_weight(xi, rank).to_dominant())
        total = total + irreducible.to_graded().times(poly)
    return total
