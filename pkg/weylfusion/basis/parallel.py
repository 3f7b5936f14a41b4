"""Parcours parallèle des sous-arbres de l'énumération"""

import asyncio
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Tuple, TypeVar

from weylfusion.basis.enumeration import enum_basis
from weylfusion.lattice import DominantWeight

logger = logging.getLogger(__name__)

T = TypeVar("T")


def top_columns(weight: DominantWeight) -> List[Tuple[int, ...]]:
    """Choix possibles de la colonne j = r des ℓ (0 <= ℓ_{i,r} <= m_i)"""
    return list(itertools.product(*(range(mi + 1) for mi in weight.m)))


async def _gather(worker: Callable[..., T], jobs: List[tuple], threads: int) -> List[T]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [loop.run_in_executor(pool, worker, *job) for job in jobs]
        return await asyncio.gather(*futures)


def map_subtrees(worker: Callable[[DominantWeight, Tuple[int, ...]], T], weight: DominantWeight, threads: int = 1) -> List[T]:
    """
    Applique `worker(λ, colonne)` à chaque sous-arbre de tête
    
    Les sous-arbres sont indépendants et sans effet de bord ; avec threads > 1
    ils sont répartis sur un pool de processus. Le résultat suit l'ordre des colonnes.
    
    Args:
        worker: Fonction de niveau module (sérialisable)
        weight: λ
        threads: Nombre de processus (1 = exécution en ligne)
    """
    jobs = [(weight, column) for column in top_columns(weight)]
    if threads <= 1 or len(jobs) <= 1:
        return [worker(*job) for job in jobs]
    logger.debug(f"{len(jobs)} sous-arbre(s) répartis sur {threads} processus")
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return asyncio.run(_gather(worker, jobs, threads))
    # Déjà dans une boucle (commandes de la CLI) : le pool est consommé directement
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, *zip(*jobs)))


def count_subtree(weight: DominantWeight, column: Tuple[int, ...]) -> int:
    return sum(1 for _ in enum_basis(weight, top_column=column))


def count_enumerated_parallel(weight: DominantWeight, threads: int = 1) -> int:
    """|B^r(λ)| par énumération, éventuellement parallèle"""
    return sum(map_subtrees(count_subtree, weight, threads))
