"""Tableaux semi-standards et statistique de charge"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from weylfusion.lattice import Partition
from weylfusion.utils.exceptions import InvalidWeight


@dataclass(frozen=True)
class Tableau:
    """Tableau de Young rempli : lignes faiblement croissantes, colonnes strictement croissantes"""
    
    rows: Tuple[Tuple[int, ...], ...]
    
    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows if row)
        object.__setattr__(self, "rows", rows)
        Partition(tuple(len(row) for row in rows))
    
    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))
    
    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
        return all(v >= 1 for row in self.rows for v in row)
    
    def content(self) -> Tuple[int, ...]:
        """Vecteur de contenu : nombre d'occurrences de 1, 2, ..., max"""
        entries = [v for row in self.rows for v in row]
        if not entries:
            return ()
        return tuple(entries.count(k) for k in range(1, max(entries) + 1))
    
    def reading_word(self) -> Tuple[int, ...]:
        """Mot de lecture : lignes de bas en haut, chacune de gauche à droite"""
        return tuple(v for row in reversed(self.rows) for v in row)
    
    def charge(self) -> int:
        return charge(self.reading_word())


def charge(word: Sequence[int]) -> int:
    """
    Charge d'un mot de contenu partition
    
    Le mot est découpé en sous-mots standards : on lit de droite à gauche,
    cycliquement, en prenant un 1, puis un 2, etc. L'indice d'une lettre augmente
    de 1 chaque fois que la lecture repart de l'extrémité droite ; la charge est
    la somme des indices sur tous les sous-mots.
    
    Raises:
        InvalidWeight: Si le contenu du mot n'est pas une partition
    """
    letters = list(word)
    if letters:
        counts = [letters.count(k) for k in range(1, max(letters) + 1)]
        if min(letters) < 1 or any(a < b for a, b in zip(counts, counts[1:])):
            raise InvalidWeight(f"Le contenu du mot {letters} n'est pas une partition")
    
    remaining = list(enumerate(letters))
    total = 0
    while remaining:
        top = max(letter for _, letter in remaining)
        cursor = len(letters)
        index = 0
        chosen = set()
        for letter in range(1, top + 1):
            candidates = [p for p, l in remaining if l == letter and p not in chosen]
            left = [p for p in candidates if p < cursor]
            if left:
                cursor = max(left)
            else:
                cursor = max(candidates)
                index += 1
            total += index
            chosen.add(cursor)
        remaining = [(p, l) for p, l in remaining if p not in chosen]
    return total


def enum_ssyt(shape: Partition, content: Sequence[int]) -> Iterator[Tableau]:
    """
    Énumère les tableaux semi-standards de forme et de contenu donnés
    
    Remplissage case par case (ordre des lignes) avec retour arrière.
    """
    parts = shape.trimmed()
    counts = [int(c) for c in content]
    while counts and counts[-1] == 0:
        counts.pop()
    if any(c < 0 for c in counts) or sum(parts) != sum(counts):
        return
    cells = [(row, col) for row, length in enumerate(parts) for col in range(length)]
    grid: List[List[int]] = [[0] * length for length in parts]
    
    def backtrack(k: int):
        if k == len(cells):
            yield Tableau(tuple(tuple(row) for row in grid))
            return
        row, col = cells[k]
        low = 1
        if col > 0:
            low = max(low, grid[row][col - 1])
        if row > 0:
            low = max(low, grid[row - 1][col] + 1)
        for value in range(low, len(counts) + 1):
            if counts[value - 1] == 0:
                continue
            counts[value - 1] -= 1
            grid[row][col] = value
            yield from backtrack(k + 1)
            counts[value - 1] += 1
        grid[row][col] = 0
    
    yield from backtrack(0)
