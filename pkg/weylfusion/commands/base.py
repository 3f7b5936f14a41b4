"""Classe de base des commandes et options partagées"""

import argparse
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict

from weylfusion.basis import count_basis, count_enumerated_parallel
from weylfusion.lattice import DominantWeight, parse_weight
from weylfusion.utils.report import Report

logger = logging.getLogger(__name__)


class Command(ABC):
    """Une sous-commande de la ligne de commande"""
    
    name: str = ""
    help: str = ""
    archived: bool = True       # Le rapport est-il archivé dans la base ?
    
    def __init__(self, app):
        self.app = app
    
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Ajoute les options propres à la commande"""
        pass
    
    @abstractmethod
    async def run(self, args: argparse.Namespace) -> Report:
        """Exécute la commande et retourne son rapport"""
        pass


def add_weight_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--weight", required=True, help="poids dominant m1,...,mr (ex. 2,1)")
    parser.add_argument("--rank", type=int, default=None, help="rang r (déduit du poids par défaut)")


def weight_from_args(args: argparse.Namespace) -> DominantWeight:
    return parse_weight(args.weight, args.rank)


def dimension_payload(weight: DominantWeight, threads: int) -> Dict[str, Any]:
    """Dimension énumérée et formule close, présentes dans tous les rapports"""
    enumerated = count_enumerated_parallel(weight, threads)
    closed_form = count_basis(weight)
    logger.info(f"λ={weight} (r={weight.rank}): {enumerated} élément(s) énuméré(s), formule close {closed_form}")
    return {"enumerated": enumerated, "closed_form": closed_form}


def weight_inputs(weight: DominantWeight) -> Dict[str, Any]:
    return {"rank": weight.rank, "weight": list(weight.m)}
