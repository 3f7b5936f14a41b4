"""Polynômes de Kostka-Foulkes par la statistique de charge"""

from typing import Sequence, Union

from weylfusion.characters.tableau import enum_ssyt
from weylfusion.lattice import Partition
from weylfusion.qpoly import QPoly
from weylfusion.utils.exceptions import InvalidWeight

STATISTICS = ("charge", "cocharge")


def _as_partition(value: Union[Partition, Sequence[int]]) -> Partition:
    return value if isinstance(value, Partition) else Partition(tuple(value))


def kostka(shape: Partition, content: Partition, statistic: str = "charge") -> QPoly:
    """
    K_{shape, content}(t) = Σ_{T ∈ SSYT(shape, content)} t^{charge(T)}
    
    Args:
        shape: Forme des tableaux
        content: Contenu (une partition)
        statistic: "charge" ou "cocharge" (n(content) - charge)
        
    Returns:
        Le polynôme, nul si |shape| != |content|
    """
    if statistic not in STATISTICS:
        raise InvalidWeight(f"Statistique inconnue: {statistic}")
    shape, content = _as_partition(shape), _as_partition(content)
    if shape.size != content.size:
        return QPoly.zero()
    n_content = content.n_statistic()
    total = QPoly.zero()
    for tableau in enum_ssyt(shape, content.trimmed()):
        value = tableau.charge()
        total = total + QPoly.monomial(value if statistic == "charge" else n_content - value)
    return total


def kostka_number(shape: Partition, content: Sequence[int]) -> int:
    """Nombre de tableaux semi-standards (comptage brut, sans statistique)"""
    return sum(1 for _ in enum_ssyt(_as_partition(shape), content))
