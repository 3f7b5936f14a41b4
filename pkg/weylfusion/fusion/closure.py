"""Filtration par le grade du produit de fusion et son caractère gradué"""

import logging
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

import sympy

from weylfusion.config import Config
from weylfusion.characters import GradedCharacter
from weylfusion.fusion.action import (
    ambient_dim,
    current_action,
    highest_tensor_index,
    tensor_weights,
    validate_factors,
)
from weylfusion.fusion.echelon import EchelonBasis, first_nonzero
from weylfusion.fusion.module import GENERATOR_KINDS, EvaluationFactor
from weylfusion.lattice import WeightVector
from weylfusion.qpoly import QPoly
from weylfusion.utils.exceptions import ClosureError, InvalidFusionSpec
from weylfusion.utils.report import CheckResult

logger = logging.getLogger(__name__)


@dataclass
class FilteredSpace:
    """Sous-espaces V^0 ⊆ V^1 ⊆ ... du produit tensoriel, découpés par poids"""
    rank: int
    ambient_dim: int
    bases: Dict[WeightVector, EchelonBasis] = field(default_factory=lambda: defaultdict(EchelonBasis))
    levels: List[Counter] = field(default_factory=list)     # nouvelles dimensions par poids, grade n
    
    @property
    def dimension(self) -> int:
        return sum(len(basis) for basis in self.bases.values())
    
    @property
    def top_grade(self) -> int:
        return len(self.levels) - 1
    
    def profile(self) -> List[int]:
        """dim V^n pour n = 0..grade maximal"""
        dims, total = [], 0
        for level in self.levels:
            total += sum(level.values())
            dims.append(total)
        return dims
    
    def graded_character(self) -> GradedCharacter:
        """Σ (dim V^n_μ − dim V^{n−1}_μ) t^n e(μ)"""
        return GradedCharacter.from_terms(
            self.rank,
            ((weight, QPoly.monomial(n, count)) for n, level in enumerate(self.levels) for weight, count in level.items())
        )


def fusion_filtration(factors: Sequence[EvaluationFactor], max_grade: Optional[int] = None) -> FilteredSpace:
    """
    Calcule la filtration V^n du produit tensoriel engendré par v_1 ⊗ ... ⊗ v_k
    
    V^n est obtenu en appliquant les générateurs x_i^±, h_i de grade s (1 <= s <= k-1)
    aux vecteurs apparus au grade n-s, puis en refermant sous l'action de g.
    L'appartenance est décidée par élimination exacte, poids par poids.
    
    Args:
        factors: Modules d'évaluation fondamentaux de même rang, points distincts
        max_grade: Borne de sécurité (Config.MAX_GRADE par défaut)
        
    Raises:
        InvalidFusionSpec: Si les facteurs sont incompatibles
        ClosureError: Si la clôture se stabilise sous la dimension totale ou dépasse max_grade
    """
    validate_factors(factors)
    max_grade = Config.MAX_GRADE if max_grade is None else max_grade
    k = len(factors)
    rank = factors[0].module.rank
    weights = tensor_weights(factors)
    space = FilteredSpace(rank, ambient_dim(factors))
    
    simple = [(kind, i) for kind in GENERATOR_KINDS for i in range(1, rank + 1)]
    raising_lowering = [current_action(factors, g, 0) for g in simple if g[0] != "h"]
    graded = {s: [current_action(factors, g, s) for g in simple] for s in range(1, k)}
    
    def absorb(vectors: Iterable[sympy.Matrix]) -> List[sympy.Matrix]:
        added: List[sympy.Matrix] = []
        level: Counter = Counter()
        queue = deque(vectors)
        while queue:
            vector = queue.popleft()
            pivot = first_nonzero(vector)
            if pivot is None:
                continue
            weight = weights[pivot]
            reduced = space.bases[weight].insert(vector)
            if reduced is None:
                continue
            added.append(reduced)
            level[weight] += 1
            queue.extend(op * reduced for op in raising_lowering)
        space.levels.append(level)
        return added
    
    start = sympy.zeros(space.ambient_dim, 1)
    start[highest_tensor_index(factors)] = 1
    new_by_grade = [absorb([start])]
    
    grade = 0
    while space.dimension < space.ambient_dim:
        grade += 1
        if grade > max_grade:
            raise ClosureError(space.dimension, space.ambient_dim,
                               f"Borne de grade {max_grade} atteinte en dimension {space.dimension}/{space.ambient_dim}")
        candidates = [
            op * vector
            for s in range(1, min(grade, k - 1) + 1)
            for op in graded[s]
            for vector in new_by_grade[grade - s]
        ]
        added = absorb(candidates)
        if not added:
            space.levels.pop()
            raise ClosureError(space.dimension, space.ambient_dim)
        new_by_grade.append(added)
        logger.debug(f"Grade {grade}: +{len(added)} vecteur(s), dimension {space.dimension}/{space.ambient_dim}")
    
    logger.info(f"Filtration de fusion stabilisée au grade {space.top_grade}, dimension {space.dimension}")
    return space


def fusion_graded_character(factors: Sequence[EvaluationFactor], max_grade: Optional[int] = None) -> GradedCharacter:
    """Caractère gradué du produit de fusion V_{a_1}(ω_{i_1}) * ... * V_{a_k}(ω_{i_k})"""
    return fusion_filtration(factors, max_grade).graded_character()


def with_points(factors: Sequence[EvaluationFactor], points: Sequence[int]) -> List[EvaluationFactor]:
    if len(points) != len(factors):
        raise InvalidFusionSpec(f"{len(points)} point(s) pour {len(factors)} facteur(s)")
    return [EvaluationFactor(f.module, p, f.index) for f, p in zip(factors, points)]


def point_independence(
    factors: Sequence[EvaluationFactor], alt_points: Sequence[int], max_grade: Optional[int] = None
) -> CheckResult:
    """Compare les caractères gradués obtenus avec deux jeux de points distincts"""
    first = fusion_graded_character(factors, max_grade)
    second = fusion_graded_character(with_points(factors, alt_points), max_grade)
    passed = first == second
    details = {"points": [f.point for f in factors], "alt_points": list(alt_points)}
    counterexample = None
    if not passed:
        bad = next(w for w in set(first.table) | set(second.table) if first[w] != second[w])
        counterexample = f"poids {bad}: {first[bad]} contre {second[bad]}"
    return CheckResult("point_independence", passed, details, counterexample)
