"""Caractères classiques par motifs de Gelfand-Tsetlin et formule de Weyl"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from weylfusion.characters.character import ClassicalCharacter
from weylfusion.lattice import DominantWeight, Partition, WeightVector, weight_to_partition
from weylfusion.utils.exceptions import InvalidWeight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GTPattern:
    """
    Motif de Gelfand-Tsetlin : lignes de longueurs r+1, r, ..., 1
    
    Entrelacement entre lignes consécutives : haut_i >= bas_i >= haut_{i+1}.
    """
    
    rows: Tuple[Tuple[int, ...], ...]
    
    def __post_init__(self):
        n = len(self.rows)
        if any(len(row) != n - k for k, row in enumerate(self.rows)):
            raise InvalidWeight("Les lignes d'un motif GT doivent avoir des longueurs r+1, r, ..., 1")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if not all(upper[i] >= lower[i] >= upper[i + 1] for i in range(len(lower))):
                raise InvalidWeight(f"Lignes non entrelacées: {upper} / {lower}")
    
    @property
    def rank(self) -> int:
        return len(self.rows) - 1
    
    def gl_weight(self) -> Tuple[int, ...]:
        """w_k = |ligne de longueur k| - |ligne de longueur k-1|"""
        sums = [0] + [sum(row) for row in reversed(self.rows)]
        return tuple(sums[k] - sums[k - 1] for k in range(1, len(sums)))
    
    def weight(self) -> WeightVector:
        """Poids sl : μ(h_i) = w_i - w_{i+1}"""
        w = self.gl_weight()
        return WeightVector(self.rank, tuple(w[i] - w[i + 1] for i in range(self.rank)))


def interlacing_rows(upper: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Lignes de longueur len(upper)-1 entrelacées sous `upper`"""
    ranges = [range(upper[i + 1], upper[i] + 1) for i in range(len(upper) - 1)]
    for row in itertools.product(*ranges):
        yield tuple(row)


def enum_gt_patterns(top: Partition, rank: int) -> Iterator[GTPattern]:
    """
    Énumère les motifs GT de ligne supérieure ξ (complétée à r+1 parts)
    
    Chaque étape de branchement gl_{n} -> gl_{n-1} choisit une ligne entrelacée.
    """
    first = top.padded(rank + 1).parts
    
    def descend(rows):
        if len(rows[-1]) == 1:
            yield GTPattern(tuple(rows))
            return
        for row in interlacing_rows(rows[-1]):
            yield from descend(rows + [row])
    
    yield from descend([first])


@lru_cache(maxsize=None)
def _classical_table(rank: int, m: Tuple[int, ...]) -> Tuple[Tuple[WeightVector, int], ...]:
    table: Dict[WeightVector, int] = {}
    for pattern in enum_gt_patterns(weight_to_partition(DominantWeight(rank, m)), rank):
        weight = pattern.weight()
        table[weight] = table.get(weight, 0) + 1
    return tuple(table.items())


def classical_character(weight: DominantWeight) -> ClassicalCharacter:
    """
    Caractère de V(λ) par branchement de Gelfand-Tsetlin depuis ξ^λ
    
    Args:
        weight: λ dominant
        
    Returns:
        ch V(λ), de dimension weyl_dim(λ)
    """
    return ClassicalCharacter(weight.rank, dict(_classical_table(weight.rank, weight.m)))


def weyl_dim(weight: DominantWeight) -> int:
    """
    dim V(λ) = Π_{i<=j} (m_i + ... + m_j + j - i + 1) / (j - i + 1)
    """
    r = weight.rank
    numerator, denominator = 1, 1
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            numerator *= sum(weight.m[i - 1:j]) + j - i + 1
            denominator *= j - i + 1
    return numerator // denominator
