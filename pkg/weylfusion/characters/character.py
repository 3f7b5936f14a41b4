"""Caractères classiques et caractères gradués"""

import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from weylfusion.lattice import WeightVector, simple_reflection
from weylfusion.qpoly import ZERO_DEGREE, QPoly
from weylfusion.utils.exceptions import RankMismatch

logger = logging.getLogger(__name__)


def _check_weights(rank: int, weights: Iterable[WeightVector]) -> None:
    for weight in weights:
        if weight.rank != rank:
            raise RankMismatch(rank, weight.rank)


class ClassicalCharacter:
    """Caractère Σ dim(V_μ) e(μ), stocké de façon creuse"""
    
    def __init__(self, rank: int, table: Optional[Mapping[WeightVector, int]] = None):
        """
        Args:
            rank: Rang r
            table: Poids -> multiplicité (les entrées nulles sont ignorées)
        """
        self.rank = rank
        table = dict(table or {})
        _check_weights(rank, table)
        self._table: Dict[WeightVector, int] = {w: int(c) for w, c in table.items() if c}
    
    @classmethod
    def trivial(cls, rank: int) -> "ClassicalCharacter":
        return cls(rank, {WeightVector.zero(rank): 1})
    
    @property
    def table(self) -> Dict[WeightVector, int]:
        return dict(self._table)
    
    def __getitem__(self, weight: WeightVector) -> int:
        return self._table.get(weight, 0)
    
    def __iter__(self) -> Iterator[WeightVector]:
        return iter(sorted(self._table, key=lambda w: w.coords))
    
    def __len__(self) -> int:
        return len(self._table)
    
    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassicalCharacter):
            return NotImplemented
        return self.rank == other.rank and self._table == other._table
    
    @property
    def dimension(self) -> int:
        return sum(self._table.values())
    
    def __add__(self, other: "ClassicalCharacter") -> "ClassicalCharacter":
        if self.rank != other.rank:
            raise RankMismatch(self.rank, other.rank)
        table = dict(self._table)
        for weight, mult in other._table.items():
            table[weight] = table.get(weight, 0) + mult
        return ClassicalCharacter(self.rank, table)
    
    def __mul__(self, other: "ClassicalCharacter") -> "ClassicalCharacter":
        """Produit dans Z[P] (caractère du produit tensoriel)"""
        if self.rank != other.rank:
            raise RankMismatch(self.rank, other.rank)
        table: Dict[WeightVector, int] = {}
        for w1, c1 in self._table.items():
            for w2, c2 in other._table.items():
                w = w1 + w2
                table[w] = table.get(w, 0) + c1 * c2
        return ClassicalCharacter(self.rank, table)
    
    def __pow__(self, n: int) -> "ClassicalCharacter":
        result = ClassicalCharacter.trivial(self.rank)
        for _ in range(n):
            result = result * self
        return result
    
    def is_weyl_symmetric(self) -> bool:
        """Invariance par toutes les réflexions simples"""
        return all(
            self[simple_reflection(i, weight)] == mult
            for weight, mult in self._table.items()
            for i in range(1, self.rank + 1)
        )
    
    def to_graded(self) -> "GradedCharacter":
        """Caractère gradué concentré en degré 0"""
        return GradedCharacter(self.rank, {w: QPoly((c,)) for w, c in self._table.items()})
    
    def to_json(self) -> List[Dict]:
        return [{"weight": list(w.coords), "multiplicity": self[w]} for w in self]
    
    def __repr__(self) -> str:
        return f"ClassicalCharacter(rank={self.rank}, dim={self.dimension}, weights={len(self)})"


class GradedCharacter:
    """Caractère gradué Σ dim(M_{μ,s}) t^s e(μ), stocké de façon creuse"""
    
    def __init__(self, rank: int, table: Optional[Mapping[WeightVector, QPoly]] = None):
        """
        Args:
            rank: Rang r
            table: Poids -> polynôme en t (les polynômes nuls sont ignorés)
        """
        self.rank = rank
        table = dict(table or {})
        _check_weights(rank, table)
        self._table: Dict[WeightVector, QPoly] = {w: p for w, p in table.items() if not p.is_zero()}
    
    @classmethod
    def from_terms(cls, rank: int, terms: Iterable[Tuple[WeightVector, QPoly]]) -> "GradedCharacter":
        """Accumule une suite de termes (μ, p) ; l'ordre des termes est indifférent"""
        table: Dict[WeightVector, QPoly] = {}
        for weight, poly in terms:
            table[weight] = table.get(weight, QPoly.zero()) + poly
        return cls(rank, table)
    
    @classmethod
    def merge(cls, rank: int, parts: Iterable[Mapping[WeightVector, QPoly]]) -> "GradedCharacter":
        """Somme de tables partielles (fusion associative et commutative)"""
        return cls.from_terms(rank, (item for part in parts for item in part.items()))
    
    @property
    def table(self) -> Dict[WeightVector, QPoly]:
        return dict(self._table)
    
    def __getitem__(self, weight: WeightVector) -> QPoly:
        return self._table.get(weight, QPoly.zero())
    
    def __iter__(self) -> Iterator[WeightVector]:
        return iter(sorted(self._table, key=lambda w: w.coords))
    
    def __len__(self) -> int:
        return len(self._table)
    
    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.rank == other.rank and self._table == other._table
    
    def __add__(self, other: "GradedCharacter") -> "GradedCharacter":
        if self.rank != other.rank:
            raise RankMismatch(self.rank, other.rank)
        return GradedCharacter.merge(self.rank, [self._table, other._table])
    
    def __sub__(self, other: "GradedCharacter") -> "GradedCharacter":
        if self.rank != other.rank:
            raise RankMismatch(self.rank, other.rank)
        return GradedCharacter.merge(self.rank, [self._table, {w: -p for w, p in other._table.items()}])
    
    def times(self, poly: QPoly) -> "GradedCharacter":
        """Multiplie tous les coefficients par un polynôme en t"""
        return GradedCharacter(self.rank, {w: p * poly for w, p in self._table.items()})
    
    def is_nonnegative(self) -> bool:
        return all(p.is_nonnegative() for p in self._table.values())
    
    def eval_at_one(self) -> ClassicalCharacter:
        """Spécialisation t = 1"""
        return ClassicalCharacter(self.rank, {w: p.eval_at_one() for w, p in self._table.items()})
    
    def slice(self, degree: int) -> ClassicalCharacter:
        """Coefficient de t^degree (un caractère classique)"""
        return ClassicalCharacter(self.rank, {w: p.coefficient(degree) for w, p in self._table.items()})
    
    def graded_dimension(self) -> QPoly:
        """Σ_μ p_μ(t)"""
        return sum(self._table.values(), QPoly.zero())
    
    def top_grade(self) -> int:
        """Plus grand degré en t présent (ZERO_DEGREE si le caractère est nul)"""
        return max((p.degree for p in self._table.values()), default=ZERO_DEGREE)
    
    def mass(self) -> int:
        """Dimension totale"""
        return self.graded_dimension().eval_at_one()
    
    def is_weyl_symmetric(self) -> bool:
        """Chaque tranche de degré fixé est invariante par le groupe de Weyl"""
        return all(self.slice(k).is_weyl_symmetric() for k in range(self.top_grade() + 1))
    
    def to_json(self) -> List[Dict]:
        """Tableau trié lexicographiquement sur les poids : {"weight": [...], "poly": [...]}"""
        return [{"weight": list(w.coords), "poly": self[w].to_list()} for w in self]
    
    def __repr__(self) -> str:
        return f"GradedCharacter(rank={self.rank}, mass={self.mass()}, weights={len(self)})"
