"""Partitions et passage poids dominant <-> partition"""

from dataclasses import dataclass
from typing import Iterator, Tuple

from weylfusion.lattice.weights import DominantWeight, WeightVector
from weylfusion.utils.exceptions import InvalidWeight, PartitionTooLong


@dataclass(frozen=True, eq=False)
class Partition:
    """
    Suite d'entiers faiblement décroissante
    
    Les zéros finaux sont autorisés et ignorés pour l'égalité et le hachage :
    (2, 1, 0) == (2, 1).
    """
    
    parts: Tuple[int, ...]
    
    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise InvalidWeight(f"Partition avec une part négative: {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidWeight(f"Partition non décroissante: {list(parts)}")
        object.__setattr__(self, "parts", parts)
    
    def trimmed(self) -> Tuple[int, ...]:
        """Retourne les parts sans les zéros finaux"""
        parts = list(self.parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return tuple(parts)
    
    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.trimmed() == other.trimmed()
    
    def __hash__(self) -> int:
        return hash(self.trimmed())
    
    def __lt__(self, other: "Partition") -> bool:
        return self.trimmed() < other.trimmed()
    
    @property
    def size(self) -> int:
        """|ξ|"""
        return sum(self.parts)
    
    @property
    def length(self) -> int:
        """Nombre de parts non nulles"""
        return len(self.trimmed())
    
    def part(self, i: int) -> int:
        """Retourne ξ_i (1-indexé, 0 au-delà de la longueur)"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0
    
    def padded(self, n: int) -> "Partition":
        """
        Retourne la partition complétée (ou tronquée) à n parts
        
        Raises:
            PartitionTooLong: Si une part non nulle serait tronquée
        """
        if self.length > n:
            raise PartitionTooLong(self.parts, n - 1)
        trimmed = self.trimmed()
        return Partition(trimmed + (0,) * (n - len(trimmed)))
    
    def add_columns(self, c: int, n: int) -> "Partition":
        """Retourne ξ + c·(1, ..., 1) sur n parts"""
        padded = self.padded(n)
        return Partition(tuple(p + c for p in padded.parts))
    
    def transpose(self) -> "Partition":
        """Partition conjuguée : ξ^tr_i = |{j : ξ_j >= i}|"""
        trimmed = self.trimmed()
        if not trimmed:
            return Partition(())
        return Partition(tuple(
            sum(1 for p in trimmed if p >= i) for i in range(1, trimmed[0] + 1)
        ))
    
    def n_statistic(self) -> int:
        """Retourne n(ξ) = Σ (i-1) ξ_i"""
        return sum(i * p for i, p in enumerate(self.parts))
    
    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.trimmed()) + "]"


def transpose(xi: Partition) -> Partition:
    """Partition transposée (involution, conserve |ξ|)"""
    return xi.transpose()


def weight_to_partition(weight: DominantWeight) -> Partition:
    """
    Associe à λ = Σ m_i ω_i la partition ξ^λ
    
    Returns:
        ξ^λ_i = Σ_{j>=i} m_j, de longueur r+1 avec ξ_{r+1} = 0
    """
    parts = [sum(weight.m[i - 1:]) for i in range(1, weight.rank + 1)]
    return Partition(tuple(parts) + (0,))


def partition_to_weight(xi: Partition, rank: int) -> WeightVector:
    """
    Associe à ξ le poids λ_ξ = Σ (ξ_i - ξ_{i+1}) ω_i
    
    Raises:
        PartitionTooLong: Si ξ a une part non nulle au-delà de l'indice r+1
    """
    if xi.length > rank + 1:
        raise PartitionTooLong(xi.parts, rank)
    return WeightVector(rank, tuple(xi.part(i) - xi.part(i + 1) for i in range(1, rank + 1)))


def lift_to_size(weight: WeightVector, size: int) -> Partition:
    """
    Relève un poids dominant en une partition de taille donnée
    
    Ajoute des colonnes de hauteur r+1 à ξ^λ jusqu'à atteindre |ξ| = size.
    
    Raises:
        InvalidWeight: Si aucun relèvement de cette taille n'existe
    """
    base = weight_to_partition(weight.to_dominant())
    n = weight.rank + 1
    excess = size - base.size
    if excess < 0 or excess % n:
        raise InvalidWeight(f"Le poids {weight} ne se relève pas en une partition de taille {size}")
    return base.add_columns(excess // n, n)


def partitions(n: int, max_parts: int) -> Iterator[Partition]:
    """
    Énumère les partitions de n en au plus max_parts parts, ordre lexicographique décroissant
    """
    def descend(remaining: int, largest: int, slots: int):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in descend(remaining - first, first, slots - 1):
                yield (first,) + rest
    
    for parts in descend(n, n, max_parts):
        yield Partition(parts)
