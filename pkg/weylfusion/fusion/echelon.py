"""Bases échelonnées en arithmétique rationnelle exacte"""

from typing import List, Optional, Tuple

import sympy


def first_nonzero(vector: sympy.Matrix) -> Optional[int]:
    return next((k for k, c in enumerate(vector) if c != 0), None)


class EchelonBasis:
    """
    Base d'un sous-espace sous forme semi-échelonnée
    
    Chaque ligne a un pivot égal à 1 et s'annule aux pivots des lignes
    insérées avant elle ; la réduction se fait donc dans l'ordre d'insertion.
    """
    
    def __init__(self):
        self._rows: List[Tuple[int, sympy.Matrix]] = []
    
    def __len__(self) -> int:
        return len(self._rows)
    
    def reduce(self, vector: sympy.Matrix) -> sympy.Matrix:
        for pivot, row in self._rows:
            c = vector[pivot]
            if c != 0:
                vector = vector - c * row
        return vector
    
    def contains(self, vector: sympy.Matrix) -> bool:
        return first_nonzero(self.reduce(vector)) is None
    
    def insert(self, vector: sympy.Matrix) -> Optional[sympy.Matrix]:
        """
        Ajoute le vecteur s'il est hors de l'espace engendré
        
        Returns:
            Le vecteur réduit et normalisé, ou None s'il était déjà dans l'espace
        """
        reduced = self.reduce(vector)
        pivot = first_nonzero(reduced)
        if pivot is None:
            return None
        reduced = reduced / reduced[pivot]
        self._rows.append((pivot, reduced))
        return reduced
