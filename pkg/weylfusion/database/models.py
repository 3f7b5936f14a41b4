"""Modèles de données de l'archive des rapports"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Optional


@dataclass
class StoredReport:
    """Représente un rapport archivé"""
    
    id: Optional[int]               # ID dans la base de données (None si pas encore sauvegardé)
    command: str                    # Nom de la commande
    inputs: Dict[str, Any]          # Entrées (λ, points, options)
    outcome: str                    # pass / mismatch / fail
    payload: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0          # Durée en secondes
    created_at: Optional[datetime] = None
    
    def __post_init__(self):
        if self.created_at is None:
            self.created_at = datetime.now()
    
    @property
    def summary(self) -> str:
        """Ligne lisible pour la commande history"""
        stamp = self.created_at.strftime("%Y-%m-%d %H:%M:%S")
        return f"#{self.id} {stamp} {self.command} {self.outcome} ({self.wall_time:.3f}s)"
    
    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "command": self.command,
            "input": self.inputs,
            "outcome": self.outcome,
            "wall_time": self.wall_time,
            "created_at": self.created_at.isoformat(),
        }
