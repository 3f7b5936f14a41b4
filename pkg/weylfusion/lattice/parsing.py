"""Syntaxe textuelle des poids et des partitions"""

import re
from typing import Optional

from weylfusion.lattice.partition import Partition
from weylfusion.lattice.weights import DominantWeight
from weylfusion.utils.exceptions import InvalidWeight, ParseError

_INTEGER_LIST = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def parse_weight(text: str, rank: Optional[int] = None) -> DominantWeight:
    """
    Analyse un poids dominant écrit "m1,m2,...,mr"
    
    Args:
        text: Texte du poids, ex. "1,0,2"
        rank: Rang attendu (déduit du nombre de coordonnées si absent)
        
    Returns:
        Le poids dominant
        
    Raises:
        ParseError: Si le texte est mal formé ou si le rang ne correspond pas
    """
    if not _INTEGER_LIST.match(text or ""):
        raise ParseError(text)
    values = tuple(int(v) for v in text.split(","))
    if rank is not None and len(values) != rank:
        raise ParseError(text, f"Le poids {text!r} a {len(values)} coordonnée(s), rang {rank} attendu")
    try:
        return DominantWeight(len(values), values)
    except InvalidWeight as e:
        raise ParseError(text, e.message)


def parse_partition(text: str) -> Partition:
    """
    Analyse une partition écrite "[3,1,1]" (crochets facultatifs)
    
    Raises:
        ParseError: Si le texte est mal formé ou non décroissant
    """
    body = (text or "").strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return Partition(())
    if not _INTEGER_LIST.match(body):
        raise ParseError(text)
    try:
        return Partition(tuple(int(v) for v in body.split(",")))
    except InvalidWeight as e:
        raise ParseError(text, e.message)
