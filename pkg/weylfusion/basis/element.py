"""Facteurs PBW et éléments de la base B^r(λ)"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from weylfusion.lattice import DominantWeight, RootVector, WeightVector, root_to_weight
from weylfusion.utils.exceptions import InvalidWeight


@dataclass(frozen=True)
class PbwFactor:
    """
    Paire (ℓ, s) : le monôme (x⊗t^{s(1)}) ... (x⊗t^{s(ℓ)})
    
    s est faiblement croissant, de longueur ℓ ; (0, ()) est l'unique facteur avec ℓ = 0.
    """
    
    ell: int
    s: Tuple[int, ...] = ()
    
    def __post_init__(self):
        s = tuple(int(v) for v in self.s)
        if self.ell < 0 or len(s) != self.ell:
            raise InvalidWeight(f"Facteur PBW incohérent: ℓ={self.ell}, s={list(s)}")
        if any(v < 0 for v in s) or any(a > b for a, b in zip(s, s[1:])):
            raise InvalidWeight(f"s doit être positif et faiblement croissant: {list(s)}")
        object.__setattr__(self, "s", s)
    
    @property
    def grade(self) -> int:
        return sum(self.s)
    
    def in_F(self, m: int) -> bool:
        """Appartenance à F(m) ; F(m) est vide pour m < 0"""
        if m < 0:
            return False
        return self.ell == 0 or self.s[-1] <= m - self.ell


EMPTY_FACTOR = PbwFactor(0, ())


@dataclass(frozen=True)
class BasisElement:
    """
    Élément de B^r(λ) : tableau triangulaire (ℓ_{i,j}, s_{i,j}), 1 <= i <= j <= r
    
    Stocké par colonnes : columns[j-1][i-1] est le facteur (i, j), ce qui suit
    l'ordre du produit x_1^-(ℓ_1,s_1) ... x_r^-(ℓ_r,s_r).
    """
    
    highest_weight: DominantWeight
    columns: Tuple[Tuple[PbwFactor, ...], ...]
    
    def __post_init__(self):
        r = self.highest_weight.rank
        if len(self.columns) != r or any(len(col) != j for j, col in enumerate(self.columns, start=1)):
            raise InvalidWeight(f"Tableau triangulaire de rang {r} attendu")
    
    @property
    def rank(self) -> int:
        return self.highest_weight.rank
    
    def factor(self, i: int, j: int) -> PbwFactor:
        """Facteur (i, j) ; le facteur vide si i > j"""
        if i > j:
            return EMPTY_FACTOR
        return self.columns[j - 1][i - 1]
    
    def ell(self, i: int, j: int) -> int:
        """ℓ_{i,j}, lu comme 0 si i > j"""
        return self.factor(i, j).ell
    
    def bound(self, i: int, j: int) -> int:
        """Membre de droite de la contrainte d'admissibilité pour (i, j)"""
        r = self.rank
        return (
            self.highest_weight.m[i - 1]
            + sum(self.ell(i + 1, s) for s in range(j + 1, r + 1))
            - sum(self.ell(i, s) for s in range(j, r + 1))
        )
    
    def is_admissible(self) -> bool:
        """Pour tout (i, j) : ℓ_{i,j} = 0 ou s_{i,j}(ℓ_{i,j}) <= borne(i, j)"""
        r = self.rank
        for j in range(1, r + 1):
            for i in range(1, j + 1):
                f = self.factor(i, j)
                if f.ell and f.s[-1] > self.bound(i, j):
                    return False
        return True
    
    @property
    def grade(self) -> int:
        """s(b) = Σ |s_{i,j}|"""
        return sum(f.grade for col in self.columns for f in col)
    
    def root(self) -> RootVector:
        """Σ ℓ_{i,j} α_{i,j}"""
        r = self.rank
        total = RootVector.zero(r)
        for j in range(1, r + 1):
            for i in range(1, j + 1):
                if self.ell(i, j):
                    total = total + RootVector.positive(r, i, j).scale(self.ell(i, j))
        return total
    
    @property
    def weight(self) -> WeightVector:
        """μ(b) = λ - Σ ℓ_{i,j} α_{i,j}"""
        return self.highest_weight.as_weight() - root_to_weight(self.root())
    
    def ell_rows(self) -> List[List[int]]:
        """Tableau des ℓ par lignes : ligne i contient ℓ_{i,i}, ..., ℓ_{i,r}"""
        r = self.rank
        return [[self.ell(i, j) for j in range(i, r + 1)] for i in range(1, r + 1)]
    
    def s_rows(self) -> List[List[List[int]]]:
        r = self.rank
        return [[list(self.factor(i, j).s) for j in range(i, r + 1)] for i in range(1, r + 1)]
    
    def last_column(self) -> Tuple[PbwFactor, ...]:
        return self.columns[-1]
    
    def strip_last_column(self) -> Tuple[Tuple[PbwFactor, ...], "BasisElement"]:
        """
        Sépare la dernière colonne (ℓ_{i,r}, s_{i,r}) du reste
        
        Returns:
            (colonne, élément de rang r-1 de plus haut poids λ - η_r(ℓ) restreint)
            
        Raises:
            InvalidWeight: Si r = 1
        """
        if self.rank < 2:
            raise InvalidWeight("Impossible de retirer une colonne en rang 1")
        column = self.last_column()
        lower = restrict_weight(self.highest_weight, tuple(f.ell for f in column))
        return column, BasisElement(lower, self.columns[:-1])
    
    def to_dict(self) -> Dict:
        """Sérialisation JSON : tableaux triangulaires par lignes, grade et poids dérivés"""
        return {
            "l": self.ell_rows(),
            "s": self.s_rows(),
            "grade": self.grade,
            "weight": list(self.weight.coords),
        }


def restrict_weight(weight: DominantWeight, column: Tuple[int, ...]) -> DominantWeight:
    """
    Restreint λ - η_r(ℓ) à sl_r
    
    Args:
        weight: λ de rang r >= 2
        column: (ℓ_1, ..., ℓ_r)
        
    Returns:
        Le poids de rang r-1 de coordonnées m_k - ℓ_k + ℓ_{k+1}
        
    Raises:
        InvalidWeight: Si le résultat n'est pas dominant (ℓ_k > m_k)
    """
    r = weight.rank
    if len(column) != r:
        raise InvalidWeight(f"Colonne de longueur {r} attendue")
    return DominantWeight(r - 1, tuple(weight.m[k] - column[k] + column[k + 1] for k in range(r - 1)))
