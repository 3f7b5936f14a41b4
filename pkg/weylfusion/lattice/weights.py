"""Réseau des poids et réseau des racines de sl_{r+1}"""

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from weylfusion.utils.exceptions import InvalidWeight, RankMismatch


def _as_coords(rank: int, values: Sequence[int], what: str) -> Tuple[int, ...]:
    """Convertit et contrôle un vecteur de coordonnées de longueur `rank`"""
    if rank < 1:
        raise InvalidWeight(f"Le rang doit être au moins 1 (reçu {rank})")
    coords = tuple(int(v) for v in values)
    if len(coords) != rank:
        raise InvalidWeight(f"{what} de rang {rank} attendu, {len(coords)} coordonnée(s) reçue(s)")
    return coords


def _check_index(rank: int, i: int) -> None:
    if not 1 <= i <= rank:
        raise InvalidWeight(f"Indice {i} hors de [1, {rank}]")


@dataclass(frozen=True)
class WeightVector:
    """Élément μ du réseau des poids P, en coordonnées dans la base des ω_i"""
    
    rank: int                   # Rang r de sl_{r+1}
    coords: Tuple[int, ...]     # μ(h_i) à l'indice i-1, entrées éventuellement négatives
    
    def __post_init__(self):
        object.__setattr__(self, "coords", _as_coords(self.rank, self.coords, "Poids"))
    
    @classmethod
    def zero(cls, rank: int) -> "WeightVector":
        return cls(rank, (0,) * rank)
    
    @classmethod
    def fundamental(cls, rank: int, i: int) -> "WeightVector":
        """Retourne le poids fondamental ω_i"""
        _check_index(rank, i)
        return cls(rank, tuple(1 if k == i else 0 for k in range(1, rank + 1)))
    
    def _check_rank(self, other) -> None:
        if self.rank != other.rank:
            raise RankMismatch(self.rank, other.rank)
    
    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._check_rank(other)
        return WeightVector(self.rank, tuple(a + b for a, b in zip(self.coords, other.coords)))
    
    def __sub__(self, other: "WeightVector") -> "WeightVector":
        self._check_rank(other)
        return WeightVector(self.rank, tuple(a - b for a, b in zip(self.coords, other.coords)))
    
    def __neg__(self) -> "WeightVector":
        return WeightVector(self.rank, tuple(-a for a in self.coords))
    
    def scale(self, k: int) -> "WeightVector":
        return WeightVector(self.rank, tuple(k * a for a in self.coords))
    
    def pairing(self, i: int) -> int:
        """Retourne μ(h_i)"""
        _check_index(self.rank, i)
        return self.coords[i - 1]
    
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)
    
    def to_dominant(self) -> "DominantWeight":
        """
        Convertit en poids dominant
        
        Raises:
            InvalidWeight: Si une coordonnée est négative
        """
        return DominantWeight(self.rank, self.coords)
    
    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class DominantWeight:
    """Poids dominant λ = Σ m_i ω_i de P^+"""
    
    rank: int                   # Rang r
    m: Tuple[int, ...]          # m_i >= 0 à l'indice i-1
    
    def __post_init__(self):
        coords = _as_coords(self.rank, self.m, "Poids dominant")
        if any(c < 0 for c in coords):
            raise InvalidWeight(f"Poids non dominant: {list(coords)}")
        object.__setattr__(self, "m", coords)
    
    @classmethod
    def zero(cls, rank: int) -> "DominantWeight":
        return cls(rank, (0,) * rank)
    
    @classmethod
    def fundamental(cls, rank: int, i: int) -> "DominantWeight":
        """Retourne ω_i comme poids dominant"""
        return WeightVector.fundamental(rank, i).to_dominant()
    
    @property
    def level(self) -> int:
        """Retourne Σ m_i (nombre de poids fondamentaux)"""
        return sum(self.m)
    
    def as_weight(self) -> WeightVector:
        return WeightVector(self.rank, self.m)
    
    def __add__(self, other: "DominantWeight") -> "DominantWeight":
        if self.rank != other.rank:
            raise RankMismatch(self.rank, other.rank)
        return DominantWeight(self.rank, tuple(a + b for a, b in zip(self.m, other.m)))
    
    def fundamental_indices(self) -> Tuple[int, ...]:
        """Retourne (1,..,1, 2,..,2, ...) : i répété m_i fois"""
        return tuple(i for i, mi in enumerate(self.m, start=1) for _ in range(mi))
    
    def __str__(self) -> str:
        return ",".join(str(c) for c in self.m)


@dataclass(frozen=True)
class RootVector:
    """Élément du réseau des racines Q, en coordonnées dans la base des α_i"""
    
    rank: int
    k: Tuple[int, ...]
    
    def __post_init__(self):
        object.__setattr__(self, "k", _as_coords(self.rank, self.k, "Racine"))
    
    @classmethod
    def zero(cls, rank: int) -> "RootVector":
        return cls(rank, (0,) * rank)
    
    @classmethod
    def simple(cls, rank: int, i: int) -> "RootVector":
        """Retourne la racine simple α_i"""
        _check_index(rank, i)
        return cls(rank, tuple(1 if k == i else 0 for k in range(1, rank + 1)))
    
    @classmethod
    def positive(cls, rank: int, i: int, j: int) -> "RootVector":
        """Retourne α_{i,j} = α_i + ... + α_j (1 <= i <= j <= r)"""
        _check_index(rank, i)
        _check_index(rank, j)
        if i > j:
            raise InvalidWeight(f"α_{{{i},{j}}} n'est pas défini pour i > j")
        return cls(rank, tuple(1 if i <= k <= j else 0 for k in range(1, rank + 1)))
    
    @classmethod
    def eta(cls, rank: int, j: int, ells: Sequence[int]) -> "RootVector":
        """
        Retourne η_j(ℓ) = Σ_{i=1}^{j} ℓ_i α_{i,j}
        
        Args:
            rank: Rang r
            j: Colonne (1 <= j <= r)
            ells: (ℓ_1, ..., ℓ_j)
        """
        _check_index(rank, j)
        if len(ells) != j:
            raise InvalidWeight(f"η_{j} attend {j} entier(s), {len(ells)} reçu(s)")
        total = cls.zero(rank)
        for i, ell in enumerate(ells, start=1):
            if ell:
                total = total + cls.positive(rank, i, j).scale(ell)
        return total
    
    def __add__(self, other: "RootVector") -> "RootVector":
        if self.rank != other.rank:
            raise RankMismatch(self.rank, other.rank)
        return RootVector(self.rank, tuple(a + b for a, b in zip(self.k, other.k)))
    
    def __sub__(self, other: "RootVector") -> "RootVector":
        if self.rank != other.rank:
            raise RankMismatch(self.rank, other.rank)
        return RootVector(self.rank, tuple(a - b for a, b in zip(self.k, other.k)))
    
    def scale(self, c: int) -> "RootVector":
        return RootVector(self.rank, tuple(c * a for a in self.k))
    
    def is_positive(self) -> bool:
        """Appartenance à Q^+"""
        return all(a >= 0 for a in self.k)


def cartan_entry(i: int, j: int) -> int:
    """Retourne ⟨α_j, h_i⟩ pour le type A"""
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def root_to_weight(root: RootVector) -> WeightVector:
    """
    Exprime un élément de Q dans la base des poids fondamentaux
    
    Args:
        root: Élément Σ k_j α_j
        
    Returns:
        Le même élément en coordonnées ω
    """
    r = root.rank
    return WeightVector(r, tuple(
        sum(cartan_entry(i, j) * root.k[j - 1] for j in range(max(1, i - 1), min(r, i + 1) + 1))
        for i in range(1, r + 1)
    ))


def weight_to_root(weight: WeightVector) -> Optional[RootVector]:
    """
    Inverse de root_to_weight sur Q
    
    Utilise l'inverse de la matrice de Cartan de type A :
    (r+1)·A^{-1}_{ij} = min(i,j)·(r+1-max(i,j)).
    
    Returns:
        La racine correspondante, ou None si le poids n'est pas dans Q
    """
    r = weight.rank
    k = []
    for i in range(1, r + 1):
        scaled = sum(min(i, j) * (r + 1 - max(i, j)) * weight.coords[j - 1] for j in range(1, r + 1))
        if scaled % (r + 1):
            return None
        k.append(scaled // (r + 1))
    return RootVector(r, tuple(k))


def dominates(mu: WeightVector, nu: WeightVector) -> bool:
    """Ordre de dominance : μ >= ν ssi μ - ν ∈ Q^+"""
    diff = weight_to_root(mu - nu)
    return diff is not None and diff.is_positive()


def simple_reflection(i: int, weight: WeightVector) -> WeightVector:
    """
    Applique la réflexion simple s_i : μ ↦ μ - μ(h_i) α_i
    
    Raises:
        InvalidWeight: Si i n'est pas dans [1, r]
    """
    _check_index(weight.rank, i)
    alpha = root_to_weight(RootVector.simple(weight.rank, i))
    return weight - alpha.scale(weight.pairing(i))


def iter_dominant(rank: int, max_level: int) -> Iterator[DominantWeight]:
    """
    Énumère les poids dominants de rang donné avec Σ m_i <= max_level
    
    L'ordre est : niveau croissant, puis lexicographique décroissant.
    """
    def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest
    
    for level in range(max_level + 1):
        for m in compositions(level, rank):
            yield DominantWeight(rank, m)
