"""Vérifications des identités de caractères"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from weylfusion.basis import count_basis, enum_V_basis
from weylfusion.characters.character import ClassicalCharacter, GradedCharacter
from weylfusion.characters.classical import classical_character, weyl_dim
from weylfusion.characters.decompose import decompose_graded
from weylfusion.characters.fermionic import character_from_basis, fermionic_character
from weylfusion.characters.kostka import kostka
from weylfusion.lattice import DominantWeight, Partition, partitions, transpose, weight_to_partition
from weylfusion.qpoly import QPoly
from weylfusion.utils.report import CheckResult

logger = logging.getLogger(__name__)

# Lectures de l'indice de Kostka, essayées dans cet ordre
KOSTKA_READINGS: List[Tuple[str, str]] = [
    ("partition", "charge"),
    ("partition", "cocharge"),
    ("column", "charge"),
    ("column", "cocharge"),
]

# Lecture établie par le balayage : seule lecture compatible pour tout λ qui départage
RESOLVED_READING = "column/charge"


def expected_kostka(weight: DominantWeight, xi: Partition, reading: str, statistic: str) -> QPoly:
    """
    Coefficient attendu de ch V(λ_ξ) dans ch_t W(λ) selon une lecture de l'indice
    
    - "partition" : K_{ξ^λ, ξ^tr}, λ lu comme la partition ξ^λ (forme)
    - "column"    : K_{ξ^tr, μ}, μ ayant m_i parts égales à i (contenu)
    """
    xi_lambda = weight_to_partition(weight)
    if reading == "partition":
        return kostka(xi_lambda, transpose(xi), statistic)
    return kostka(transpose(xi), transpose(xi_lambda), statistic)


def select_reading(matching: Sequence[str]) -> Optional[str]:
    """
    Lecture retenue parmi les lectures compatibles

    RESOLVED_READING est préférée dès qu'elle est compatible : un λ pour lequel
    toutes les lectures coïncident ne départage rien.
    """
    if RESOLVED_READING in matching:
        return RESOLVED_READING
    return matching[0] if matching else None


def resolve_kostka_reading(results: Iterable[CheckResult]) -> Tuple[Optional[str], List[str]]:
    """
    Lectures compatibles avec tous les résultats de verify_kostka donnés

    Returns:
        (lecture retenue, lectures communes dans l'ordre de KOSTKA_READINGS)
    """
    common = [f"{reading}/{statistic}" for reading, statistic in KOSTKA_READINGS]
    for result in results:
        common = [label for label in common if label in result.details.get("matching_readings", [])]
    return select_reading(common), common


def verify_kostka(weight: DominantWeight, character: Optional[GradedCharacter] = None) -> CheckResult:
    """
    Compare la décomposition de ch_t W(λ) aux polynômes de Kostka
    
    Toutes les lectures de KOSTKA_READINGS sont essayées ; la vérification réussit
    si l'une d'elles coïncide partout et si c_{ξ^λ}(t) = 1. Le rapport indique
    les lectures compatibles, la lecture retenue (voir select_reading) et si
    λ départage les lectures.
    
    Args:
        weight: λ
        character: ch_t W(λ) déjà calculé (sinon la formule fermionique est utilisée)
    """
    character = character or fermionic_character(weight)
    xi_lambda = weight_to_partition(weight)
    decomposition = decompose_graded(character, size=xi_lambda.size)
    
    candidates = set(decomposition) | set(partitions(xi_lambda.size, weight.rank + 1))
    matching: List[str] = []
    first_mismatch: Dict[str, str] = {}
    for reading, statistic in KOSTKA_READINGS:
        label = f"{reading}/{statistic}"
        for xi in sorted(candidates, reverse=True):
            got = decomposition.get(xi, QPoly.zero())
            want = expected_kostka(weight, xi, reading, statistic)
            if got != want:
                first_mismatch[label] = f"ξ={xi}: décomposition {got}, Kostka {want}"
                break
        else:
            matching.append(label)
    
    top_coefficient = decomposition.get(xi_lambda, QPoly.zero())
    passed = bool(matching) and top_coefficient == QPoly.one()
    details = {
        "decomposition": {str(xi): poly.to_list() for xi, poly in sorted(decomposition.items(), reverse=True)},
        "matching_readings": matching,
        "selected": select_reading(matching),
        "discriminating": 0 < len(matching) < len(KOSTKA_READINGS),
        "top_grade": character.top_grade(),
    }
    counterexample = None
    if not passed:
        counterexample = "; ".join(f"{k}: {v}" for k, v in first_mismatch.items()) or f"c_ξ^λ = {top_coefficient}"
    return CheckResult("kostka", passed, details, counterexample)


def verify_demazure_factorization(weight: DominantWeight, character: Optional[GradedCharacter] = None) -> CheckResult:
    """
    ch_t W(λ) en t = 1 contre Π_i ch V(ω_i)^{m_i}, poids par poids
    """
    character = character or fermionic_character(weight)
    at_one = character.eval_at_one()
    product = ClassicalCharacter.trivial(weight.rank)
    for i, mi in enumerate(weight.m, start=1):
        product = product * classical_character(DominantWeight.fundamental(weight.rank, i)) ** mi
    passed = at_one == product
    counterexample = None
    if not passed:
        bad = next(w for w in set(at_one.table) | set(product.table) if at_one[w] != product[w])
        counterexample = f"poids {bad}: {at_one[bad]} contre {product[bad]}"
    return CheckResult("demazure", passed, {"mass": at_one.dimension}, counterexample)


def verify_fermionic_vs_basis(weight: DominantWeight, threads: int = 1) -> CheckResult:
    """Deux calculs indépendants de ch_t W(λ) : formule fermionique et base"""
    fermionic = fermionic_character(weight, threads)
    from_basis = character_from_basis(weight, threads)
    passed = fermionic == from_basis
    counterexample = None
    if not passed:
        bad = next(w for w in set(fermionic.table) | set(from_basis.table) if fermionic[w] != from_basis[w])
        counterexample = f"poids {bad}: {fermionic[bad]} contre {from_basis[bad]}"
    return CheckResult("fermionic_vs_basis", passed, {"mass": fermionic.mass()}, counterexample)


def verify_dimension(weight: DominantWeight, character: GradedCharacter) -> CheckResult:
    """Masse totale du caractère contre Π binom(r+1, i)^{m_i}"""
    expected = count_basis(weight)
    mass = character.mass()
    return CheckResult(
        "dimension", mass == expected, {"mass": mass, "closed_form": expected},
        None if mass == expected else f"masse {mass}, formule close {expected}"
    )


def verify_grade_zero(weight: DominantWeight, character: GradedCharacter) -> CheckResult:
    """Tranche t^0 = ch V(λ) et |base de V(λ)| = dim V(λ)"""
    classical = classical_character(weight)
    v_count = sum(1 for _ in enum_V_basis(weight))
    dim = weyl_dim(weight)
    slice_ok = character.slice(0) == classical
    passed = slice_ok and v_count == dim == classical.dimension
    counterexample = None
    if not passed:
        counterexample = f"tranche 0 conforme: {slice_ok}, |base V(λ)| = {v_count}, dim = {dim}"
    return CheckResult("grade_zero", passed, {"v_basis": v_count, "weyl_dim": dim}, counterexample)


def verify_weyl_symmetry(character: GradedCharacter) -> CheckResult:
    """Chaque tranche de degré fixé est invariante par les réflexions simples"""
    for degree in range(character.top_grade() + 1):
        if not character.slice(degree).is_weyl_symmetric():
            return CheckResult("weyl_symmetry", False, counterexample=f"tranche t^{degree} non symétrique")
    return CheckResult("weyl_symmetry", True, {"top_grade": character.top_grade()})
