"""Sous-commandes de la ligne de commande"""

__all__ = []
