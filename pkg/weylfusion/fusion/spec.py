"""Syntaxe textuelle d'un produit de fusion : "r=2; factors=w1@0,w1@1,w2@5" """

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from weylfusion.fusion.module import EvaluationFactor, build_fundamental
from weylfusion.lattice import DominantWeight
from weylfusion.utils.exceptions import InvalidFusionSpec, ParseError

_FACTOR = re.compile(r"^w(\d+)(?:@(-?\d+))?$")
_POINTS = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


@dataclass(frozen=True)
class FusionSpec:
    """Rang, indices fondamentaux i_1..i_k et points d'évaluation a_1..a_k"""
    rank: int
    indices: Tuple[int, ...]
    points: Tuple[int, ...]
    
    @property
    def highest_weight(self) -> DominantWeight:
        """λ = Σ_s ω_{i_s}"""
        m = [0] * self.rank
        for i in self.indices:
            m[i - 1] += 1
        return DominantWeight(self.rank, tuple(m))
    
    def with_points(self, points: Sequence[int]) -> "FusionSpec":
        spec = FusionSpec(self.rank, self.indices, tuple(points))
        spec.validate()
        return spec
    
    def validate(self) -> None:
        if not self.indices:
            raise InvalidFusionSpec("Au moins un facteur est requis")
        if len(self.points) != len(self.indices):
            raise InvalidFusionSpec(f"{len(self.points)} point(s) pour {len(self.indices)} facteur(s)")
        if len(set(self.points)) != len(self.points):
            raise InvalidFusionSpec(f"Points d'évaluation répétés: {list(self.points)}")
        for i in self.indices:
            if not 1 <= i <= self.rank:
                raise InvalidFusionSpec(f"ω_{i} n'est pas un poids fondamental en rang {self.rank}")
    
    def factors(self) -> List[EvaluationFactor]:
        modules = {i: build_fundamental(self.rank, i) for i in set(self.indices)}
        return [EvaluationFactor(modules[i], a, i) for i, a in zip(self.indices, self.points)]
    
    def __str__(self) -> str:
        body = ",".join(f"w{i}@{a}" for i, a in zip(self.indices, self.points))
        return f"r={self.rank}; factors={body}"


def parse_points(text: str) -> Tuple[int, ...]:
    """Analyse une liste de points "3,7" """
    if not _POINTS.match(text or ""):
        raise ParseError(text)
    return tuple(int(v) for v in text.split(","))


def parse_fusion_spec(text: str, points: Optional[Sequence[int]] = None, rank: Optional[int] = None) -> FusionSpec:
    """
    Analyse "r=2; factors=w1@0,w1@1,w2@5"
    
    Les points absents valent 0, 1, ..., k-1. Un jeu de points explicite
    (option --points) remplace ceux du texte. Le champ "r=" peut être omis
    si le rang est passé séparément (option --rank).
    
    Raises:
        ParseError: Texte mal formé ou rang contradictoire
        InvalidFusionSpec: Points répétés ou facteur non fondamental
    """
    fields = {}
    for chunk in (text or "").split(";"):
        if not chunk.strip():
            continue
        key, sep, value = chunk.partition("=")
        if not sep:
            raise ParseError(text)
        fields[key.strip().lower()] = value.strip()
    if rank is not None:
        if "r" in fields and fields["r"] != str(rank):
            raise ParseError(text, f"Rang {fields['r']} dans la spécification, {rank} demandé")
        fields.setdefault("r", str(rank))
    if set(fields) != {"r", "factors"} or not fields["r"].isdigit():
        raise ParseError(text, f"Spécification de fusion attendue sous la forme 'r=2; factors=w1@0,w2@1': {text!r}")
    
    rank = int(fields["r"])
    if rank < 1:
        raise ParseError(text, f"Rang invalide: {rank}")
    indices, parsed_points = [], []
    for item in fields["factors"].split(","):
        match = _FACTOR.match(item.strip())
        if not match:
            raise ParseError(text, f"Facteur mal formé: {item.strip()!r}")
        indices.append(int(match.group(1)))
        parsed_points.append(None if match.group(2) is None else int(match.group(2)))
    
    if points is not None:
        chosen = tuple(points)
    elif all(p is None for p in parsed_points):
        chosen = tuple(range(len(indices)))
    elif any(p is None for p in parsed_points):
        raise ParseError(text, "Les points d'évaluation doivent être tous donnés ou tous omis")
    else:
        chosen = tuple(parsed_points)
    
    spec = FusionSpec(rank, tuple(indices), chosen)
    spec.validate()
    return spec
