"""Récurrence par retrait de la dernière colonne"""

import itertools
import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, Tuple

from weylfusion.basis.element import restrict_weight
from weylfusion.basis.enumeration import (
    column_multiplicity,
    count_enumerated,
    enum_basis,
    enum_F,
)
from weylfusion.lattice import DominantWeight
from weylfusion.utils.exceptions import InvalidWeight
from weylfusion.utils.report import CheckResult

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _count_recursive(rank: int, m: Tuple[int, ...]) -> int:
    if rank == 1:
        return 2 ** m[0]
    weight = DominantWeight(rank, m)
    total = 0
    for column in itertools.product(*(range(mi + 1) for mi in m)):
        total += _count_recursive(rank - 1, restrict_weight(weight, column).m) * column_multiplicity(weight, column)
    return total


def count_by_recursion(weight: DominantWeight) -> int:
    """
    |B^r(λ)| = Σ_ℓ |B^{r-1}(λ - η_r(ℓ))| Π binom(m_i, ℓ_i), avec |B^1(nω)| = 2^n
    """
    return _count_recursive(weight.rank, weight.m)


def check_recursion(weight: DominantWeight) -> CheckResult:
    """
    Vérifie que B^r(λ) est la réunion disjointe des B^{r-1}(λ - η_r(ℓ))·x_r^-(ℓ, s)
    
    Pour chaque élément : la dernière colonne doit être dans F^r(λ) et le reste
    doit être admissible pour le poids restreint. La réunion doit être disjointe
    et chaque colonne de F^r(λ) doit apparaître avec |B^{r-1}(λ - η_r(ℓ))| éléments.
    
    Args:
        weight: λ de rang r >= 2
        
    Returns:
        Le résultat, avec le premier contre-exemple éventuel
        
    Raises:
        InvalidWeight: Si r < 2
    """
    if weight.rank < 2:
        raise InvalidWeight("La vérification de récurrence demande r >= 2")
    
    name = "recursion"
    seen = set()
    per_column: Counter = Counter()
    
    for element in enum_basis(weight):
        column, lower = element.strip_last_column()
        if not all(f.in_F(mi) for f, mi in zip(column, weight.m)):
            return CheckResult(name, False, counterexample=f"colonne hors de F^r(λ): {element.to_dict()}")
        if not lower.is_admissible():
            return CheckResult(name, False, counterexample=f"reste non admissible: {element.to_dict()}")
        key = (column, lower.columns)
        if key in seen:
            return CheckResult(name, False, counterexample=f"élément compté deux fois: {element.to_dict()}")
        seen.add(key)
        per_column[column] += 1
    
    ell_multiplicities: Counter = Counter()
    for column in itertools.product(*(list(enum_F(mi)) for mi in weight.m)):
        expected = count_enumerated(restrict_weight(weight, tuple(f.ell for f in column)))
        if per_column.get(column, 0) != expected:
            return CheckResult(
                name, False,
                counterexample=f"colonne {[(f.ell, list(f.s)) for f in column]}: "
                               f"{per_column.get(column, 0)} élément(s), {expected} attendu(s)"
            )
        ell_multiplicities[tuple(f.ell for f in column)] += 1
    
    multiplicities: Dict[str, int] = {}
    for ells, count in sorted(ell_multiplicities.items()):
        if count != column_multiplicity(weight, ells):
            return CheckResult(name, False, counterexample=f"multiplicité de la colonne ℓ={list(ells)}: {count}")
        multiplicities[",".join(str(e) for e in ells)] = count
    
    logger.debug(f"Récurrence vérifiée pour λ={weight}: {len(seen)} élément(s)")
    return CheckResult(name, True, details={"elements": len(seen), "column_multiplicities": multiplicities})
