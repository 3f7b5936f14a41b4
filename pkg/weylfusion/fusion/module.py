"""Modules explicites : V(ω_i) = Λ^i C^{r+1} avec matrices rationnelles exactes"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import sympy

from weylfusion.lattice import WeightVector
from weylfusion.lattice.weights import cartan_entry
from weylfusion.utils.exceptions import InvalidWeight
from weylfusion.utils.report import CheckResult

logger = logging.getLogger(__name__)

# Générateurs de Chevalley : x_i^+, x_i^-, h_i
GENERATOR_KINDS: Tuple[str, ...] = ("x+", "x-", "h")

Generator = Tuple[str, int]


@dataclass
class ExplicitModule:
    """Module de dimension finie donné par une base étiquetée et les matrices des générateurs"""
    rank: int
    labels: List[Tuple[int, ...]]
    matrices: Dict[Generator, sympy.Matrix]
    highest_index: int = 0
    
    @property
    def dim(self) -> int:
        return len(self.labels)
    
    def generator(self, kind: str, i: int) -> sympy.Matrix:
        """Matrice de x_i^+, x_i^- ou h_i"""
        if kind not in GENERATOR_KINDS or not 1 <= i <= self.rank:
            raise InvalidWeight(f"Générateur inconnu: {kind}{i} (rang {self.rank})")
        return self.matrices[(kind, i)]
    
    def weight_of(self, index: int) -> WeightVector:
        """Poids du vecteur de base, lu sur la diagonale des h_i"""
        return WeightVector(self.rank, tuple(int(self.matrices[("h", i)][index, index]) for i in range(1, self.rank + 1)))
    
    def check_invariants(self) -> CheckResult:
        """
        h_i diagonales et commutantes, [x_i^+, x_i^-] = h_i,
        [h_i, x_j^±] = ±⟨α_j, h_i⟩ x_j^±
        """
        name = "module_invariants"
        for i in range(1, self.rank + 1):
            h = self.generator("h", i)
            if not h.is_diagonal():
                return CheckResult(name, False, counterexample=f"h_{i} n'est pas diagonale")
            e, f = self.generator("x+", i), self.generator("x-", i)
            if e * f - f * e != h:
                return CheckResult(name, False, counterexample=f"[x_{i}^+, x_{i}^-] != h_{i}")
            for j in range(1, self.rank + 1):
                if h * self.generator("h", j) != self.generator("h", j) * h:
                    return CheckResult(name, False, counterexample=f"h_{i} et h_{j} ne commutent pas")
                for kind, sign in (("x+", 1), ("x-", -1)):
                    x = self.generator(kind, j)
                    if h * x - x * h != sign * cartan_entry(i, j) * x:
                        return CheckResult(name, False, counterexample=f"[h_{i}, {kind}_{j}] incorrect")
        return CheckResult(name, True, {"dim": self.dim})


@dataclass(frozen=True)
class EvaluationFactor:
    """Module d'évaluation V_a : x ⊗ t^s agit par a^s x"""
    module: ExplicitModule
    point: int
    index: int = 0
    
    def __str__(self) -> str:
        return f"w{self.index}@{self.point}"


def _elementary(labels: List[Tuple[int, ...]], a: int, b: int) -> sympy.Matrix:
    """Action de E_ab sur Λ^i : e_b est remplacé par e_a, signe selon le réordonnancement"""
    position = {label: k for k, label in enumerate(labels)}
    matrix = sympy.zeros(len(labels), len(labels))
    for k, subset in enumerate(labels):
        if b not in subset or (a != b and a in subset):
            continue
        rest = [c for c in subset if c != b]
        target = tuple(sorted(rest + [a]))
        crossed = sum(1 for c in rest if min(a, b) < c < max(a, b))
        matrix[position[target], k] = (-1) ** crossed
    return matrix


def build_fundamental(rank: int, i: int) -> ExplicitModule:
    """
    Construit V(ω_i) comme puissance extérieure i-ième de la représentation naturelle
    
    La base est indexée par les parties à i éléments de {1, ..., r+1} dans l'ordre
    lexicographique ; le vecteur de plus haut poids est e_1 ∧ ... ∧ e_i (indice 0).
    
    Args:
        rank: r >= 1
        i: 1 <= i <= r
        
    Raises:
        InvalidWeight: Si l'indice est hors bornes
    """
    if rank < 1 or not 1 <= i <= rank:
        raise InvalidWeight(f"Poids fondamental ω_{i} inexistant en rang {rank}")
    labels = list(itertools.combinations(range(1, rank + 2), i))
    matrices: Dict[Generator, sympy.Matrix] = {}
    for j in range(1, rank + 1):
        matrices[("x+", j)] = _elementary(labels, j, j + 1)
        matrices[("x-", j)] = _elementary(labels, j + 1, j)
        matrices[("h", j)] = _elementary(labels, j, j) - _elementary(labels, j + 1, j + 1)
    logger.debug(f"V(ω_{i}) construit en rang {rank}: dimension {len(labels)}")
    return ExplicitModule(rank, labels, matrices, highest_index=0)
