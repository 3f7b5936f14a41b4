"""Exceptions personnalisées de weylfusion"""


class WeylError(Exception):
    """Exception de base pour toutes les erreurs de calcul"""
    
    def __init__(self, message: str = "Une erreur de calcul s'est produite"):
        self.message = message
        super().__init__(self.message)


class RankMismatch(WeylError):
    """Opération entre éléments de rangs différents"""
    
    def __init__(self, left: int = 0, right: int = 0, message: str = ""):
        if not message:
            message = f"Rangs incompatibles: {left} et {right}"
        super().__init__(message)
        self.left = left
        self.right = right


class InvalidWeight(WeylError):
    """Poids, rang ou indice invalide"""
    
    def __init__(self, message: str = "Poids invalide"):
        super().__init__(message)


class PartitionTooLong(WeylError):
    """Partition avec une part non nulle au-delà de l'indice r+1"""
    
    def __init__(self, parts: tuple = (), rank: int = 0, message: str = ""):
        if not message:
            message = f"partition too long for rank {rank}: {list(parts)}"
        super().__init__(message)
        self.parts = parts
        self.rank = rank


class ParseError(WeylError):
    """Texte d'entrée mal formé (poids, partition, spécification de fusion)"""
    
    def __init__(self, text: str = "", message: str = ""):
        if not message:
            message = f"Impossible d'analyser: {text!r}" if text else "Entrée mal formée"
        super().__init__(message)
        self.text = text


class DecompositionError(WeylError):
    """L'élimination triangulaire a produit un coefficient négatif"""
    
    def __init__(self, message: str = "Le caractère n'est pas une combinaison positive de caractères irréductibles"):
        super().__init__(message)


class ClosureError(WeylError):
    """La clôture du module de fusion n'atteint pas la dimension totale"""
    
    def __init__(self, reached: int = 0, expected: int = 0, message: str = ""):
        if not message:
            message = f"Clôture stabilisée en dimension {reached} au lieu de {expected}"
        super().__init__(message)
        self.reached = reached
        self.expected = expected


class InvalidFusionSpec(WeylError):
    """Données de fusion invalides (points répétés, rangs mélangés...)"""
    
    def __init__(self, message: str = "Spécification de fusion invalide"):
        super().__init__(message)


# Erreurs imputables à l'entrée de l'utilisateur (code de sortie 2)
USAGE_ERRORS = (ParseError, InvalidWeight, PartitionTooLong, InvalidFusionSpec, RankMismatch)
