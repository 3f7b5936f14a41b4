"""Formule fermionique et caractère issu de la base"""

import logging
from typing import Dict, Iterator, Optional, Tuple

from weylfusion.basis import enum_basis, map_subtrees
from weylfusion.characters.character import GradedCharacter
from weylfusion.lattice import DominantWeight, RootVector, WeightVector, root_to_weight
from weylfusion.qpoly import QPoly, qbinom

logger = logging.getLogger(__name__)


def fermionic_terms(
    weight: DominantWeight,
    top_column: Optional[Tuple[int, ...]] = None
) -> Iterator[Tuple[WeightVector, QPoly]]:
    """
    Termes Π_{i<=j} [m_{i,j} choose ℓ_{i,j}]_t · e(λ - Σ ℓ_{i,j} α_{i,j})
    
    m_{i,j} = m_i + Σ_{s>j} ℓ_{i+1,s} - Σ_{s>j} ℓ_{i,s}. Un tableau dont un
    facteur q-binomial est nul ne contribue pas.
    
    Args:
        weight: λ
        top_column: Si fourni, impose (ℓ_{1,r}, ..., ℓ_{r,r})
    """
    r = weight.rank
    cells = [(i, j) for j in range(r, 0, -1) for i in range(1, j + 1)]
    ells: Dict[Tuple[int, int], int] = {}
    
    def m_ij(i: int, j: int) -> int:
        return (
            weight.m[i - 1]
            + sum(ells.get((i + 1, s), 0) for s in range(j + 1, r + 1))
            - sum(ells[(i, s)] for s in range(j + 1, r + 1))
        )
    
    def descend(k: int, product: QPoly):
        if k == len(cells):
            root = RootVector.zero(r)
            for (i, j), ell in ells.items():
                if ell:
                    root = root + RootVector.positive(r, i, j).scale(ell)
            yield weight.as_weight() - root_to_weight(root), product
            return
        i, j = cells[k]
        m = m_ij(i, j)
        if j == r and top_column is not None:
            choices = [top_column[i - 1]]
        else:
            choices = range(max(m, 0) + 1)
        for ell in choices:
            factor = qbinom(m, ell)
            if factor.is_zero():
                continue
            ells[(i, j)] = ell
            yield from descend(k + 1, product * factor)
            del ells[(i, j)]
    
    yield from descend(0, QPoly.one())


def fermionic_subtree(weight: DominantWeight, column: Tuple[int, ...]) -> Dict[WeightVector, QPoly]:
    return GradedCharacter.from_terms(weight.rank, fermionic_terms(weight, column)).table


def basis_subtree(weight: DominantWeight, column: Tuple[int, ...]) -> Dict[WeightVector, QPoly]:
    terms = ((b.weight, QPoly.monomial(b.grade)) for b in enum_basis(weight, top_column=column))
    return GradedCharacter.from_terms(weight.rank, terms).table


def fermionic_character(weight: DominantWeight, threads: int = 1) -> GradedCharacter:
    """
    ch_t W(λ) par la formule fermionique
    
    Args:
        weight: λ dominant
        threads: Processus utilisés pour les sous-arbres de tête
    """
    parts = map_subtrees(fermionic_subtree, weight, threads)
    character = GradedCharacter.merge(weight.rank, parts)
    logger.debug(f"Caractère fermionique de λ={weight}: {character!r}")
    return character


def character_from_basis(weight: DominantWeight, threads: int = 1) -> GradedCharacter:
    """
    Σ_{b ∈ B^r(λ)} t^{s(b)} e(μ(b)), indépendant de l'ordre d'énumération
    """
    parts = map_subtrees(basis_subtree, weight, threads)
    return GradedCharacter.merge(weight.rank, parts)


def sl2_graded_dimension(n: int) -> QPoly:
    """Dimension graduée de W(nω) pour sl_2 : Σ_ℓ [n choose ℓ]_t"""
    return sum((qbinom(n, ell) for ell in range(n + 1)), QPoly.zero())
