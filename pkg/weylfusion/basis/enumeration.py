"""Énumération de F(m), de B^r(λ) et de la base de V(λ)"""

import itertools
import logging
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from weylfusion.basis.element import BasisElement, PbwFactor
from weylfusion.lattice import DominantWeight, RootVector, WeightVector, root_to_weight
from weylfusion.utils.exceptions import InvalidWeight

logger = logging.getLogger(__name__)

# Tableau des ℓ par colonnes : ells[j-1][i-1] = ℓ_{i,j}
EllColumns = Tuple[Tuple[int, ...], ...]


def colex_multisets(length: int, top: int) -> Iterator[Tuple[int, ...]]:
    """
    Suites faiblement croissantes 0 <= s(1) <= ... <= s(length) <= top, en ordre colex
    """
    if length == 0:
        yield ()
        return
    if top < 0:
        return
    for last in range(top + 1):
        for prefix in colex_multisets(length - 1, last):
            yield prefix + (last,)


def enum_F(m: int) -> Iterator[PbwFactor]:
    """
    Énumère F(m) = {(0, ∅)} ∪ {(ℓ, s) : ℓ > 0, 0 <= s(i) <= m - ℓ}
    
    Args:
        m: Entier quelconque (F(m) est vide si m < 0)
        
    Yields:
        Les facteurs par ℓ croissant, s en ordre colex
    """
    if m < 0:
        return
    for ell in range(m + 1):
        for s in colex_multisets(ell, m - ell):
            yield PbwFactor(ell, s)


def enum_ell_columns(
    weight: DominantWeight,
    top_column: Optional[Tuple[int, ...]] = None
) -> Iterator[Tuple[EllColumns, EllColumns]]:
    """
    Énumère les tableaux de ℓ vérifiant ℓ_{i,j} <= m_{i,j}
    
    Les colonnes sont choisies de j = r à j = 1 : la borne
    m_{i,j} = m_i + Σ_{s>j} ℓ_{i+1,s} - Σ_{s>j} ℓ_{i,s} ne dépend que des
    colonnes déjà choisies et se propage par m_{i,j-1} = m_{i,j} - ℓ_{i,j} + ℓ_{i+1,j}.
    
    Args:
        weight: λ
        top_column: Si fourni, impose la colonne j = r (découpage en sous-arbres)
        
    Yields:
        (ells, bounds) par colonnes, bounds[j-1][i-1] = m_{i,j}
    """
    r = weight.rank
    
    def descend(j: int, m_col: Tuple[int, ...], ells: List[Tuple[int, ...]], bounds: List[Tuple[int, ...]]):
        if j == 0:
            yield tuple(reversed(ells)), tuple(reversed(bounds))
            return
        if j == r and top_column is not None:
            choices = [tuple(top_column)] if all(0 <= e <= b for e, b in zip(top_column, m_col)) else []
        else:
            choices = itertools.product(*(range(b + 1) for b in m_col))
        for column in choices:
            next_m = tuple(m_col[i] - column[i] + column[i + 1] for i in range(j - 1))
            ells.append(column)
            bounds.append(m_col)
            yield from descend(j - 1, next_m, ells, bounds)
            ells.pop()
            bounds.pop()
    
    if top_column is not None and len(top_column) != r:
        raise InvalidWeight(f"Colonne de tête de longueur {r} attendue")
    yield from descend(r, weight.m, [], [])


def enum_basis(weight: DominantWeight, top_column: Optional[Tuple[int, ...]] = None) -> Iterator[BasisElement]:
    """
    Énumère B^r(λ)
    
    Ordre déterministe : tableaux de ℓ selon enum_ell_columns, puis pour chaque
    facteur (1,1), (1,2), (2,2), (1,3), ... les s en ordre colex.
    
    Args:
        weight: λ dominant
        top_column: Restreint l'énumération à une colonne j = r de ℓ donnée
        
    Yields:
        Les éléments admissibles
    """
    r = weight.rank
    for ells, bounds in enum_ell_columns(weight, top_column):
        slots = []
        for j in range(1, r + 1):
            for i in range(1, j + 1):
                ell = ells[j - 1][i - 1]
                slots.append([PbwFactor(ell, s) for s in colex_multisets(ell, bounds[j - 1][i - 1] - ell)])
        for choice in itertools.product(*slots):
            columns, k = [], 0
            for j in range(1, r + 1):
                columns.append(tuple(choice[k:k + j]))
                k += j
            yield BasisElement(weight, tuple(columns))


def enum_V_basis(weight: DominantWeight) -> Iterator[List[List[int]]]:
    """
    Énumère la base de V(λ) : tableaux ℓ avec m_i + Σ_{s>j} ℓ_{i+1,s} - Σ_{s>=j} ℓ_{i,s} >= 0
    
    Yields:
        Tableaux par lignes : ligne i = [ℓ_{i,i}, ..., ℓ_{i,r}]
    """
    r = weight.rank
    for ells, _ in enum_ell_columns(weight):
        yield [[ells[j - 1][i - 1] for j in range(i, r + 1)] for i in range(1, r + 1)]


def count_basis(weight: DominantWeight) -> int:
    """
    |B^r(λ)| par la formule close Π_i binom(r+1, i)^{m_i}
    """
    r = weight.rank
    total = 1
    for i, mi in enumerate(weight.m, start=1):
        total *= comb(r + 1, i) ** mi
    return total


def count_enumerated(weight: DominantWeight) -> int:
    """|B^r(λ)| en parcourant l'énumération"""
    return sum(1 for _ in enum_basis(weight))


def is_member_def1(element: BasisElement) -> bool:
    """
    Appartenance par la forme « poids décalés »
    
    Pour j = r, ..., 1 : (ℓ_{i,j}, s_{i,j}) ∈ F(μ_j(h_i)) pour i <= j, où
    μ_j = λ - Σ_{s>j} η_s(ℓ_s) est calculé dans le réseau des racines.
    """
    r = element.rank
    shift = RootVector.zero(r)
    for j in range(r, 0, -1):
        mu: WeightVector = element.highest_weight.as_weight() - root_to_weight(shift)
        for i in range(1, j + 1):
            if not element.factor(i, j).in_F(mu.pairing(i)):
                return False
        shift = shift + RootVector.eta(r, j, [element.ell(i, j) for i in range(1, j + 1)])
    return True


def column_multiplicity(weight: DominantWeight, column: Sequence[int]) -> int:
    """Nombre de colonnes (ℓ_i, s_i) ∈ F^r(λ) de ℓ donnés : Π binom(m_i, ℓ_i)"""
    total = 1
    for mi, ell in zip(weight.m, column):
        total *= comb(mi, ell)
    return total
