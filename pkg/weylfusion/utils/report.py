"""Résultats de vérification et rapports de commande"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from weylfusion.config import Config

OUTCOME_PASS = "pass"
OUTCOME_MISMATCH = "mismatch"
OUTCOME_FAIL = "fail"


@dataclass
class CheckResult:
    """Résultat d'une vérification individuelle (un écart n'est pas une exception)"""
    
    name: str                               # Nom de la vérification
    passed: bool                            # True si l'identité est vérifiée
    details: Dict[str, Any] = field(default_factory=dict)
    counterexample: Optional[str] = None    # Premier contre-exemple rencontré
    
    def to_dict(self) -> Dict[str, Any]:
        data = {"name": self.name, "passed": self.passed, "details": self.details}
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        return data


@dataclass
class Report:
    """Rapport déterministe d'une commande"""
    
    command: str                            # Écho de la commande
    inputs: Dict[str, Any]                  # λ, points, options...
    payload: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0                  # Durée d'exécution en secondes
    error: Optional[str] = None             # Message d'erreur (issue "fail")
    
    def add_check(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check
    
    @property
    def outcome(self) -> str:
        """pass / mismatch / fail"""
        if self.error is not None:
            return OUTCOME_FAIL
        if all(check.passed for check in self.checks):
            return OUTCOME_PASS
        return OUTCOME_MISMATCH
    
    @property
    def exit_code(self) -> int:
        return Config.EXIT_PASS if self.outcome == OUTCOME_PASS else Config.EXIT_MISMATCH
    
    def to_dict(self) -> Dict[str, Any]:
        data = {
            "command": self.command,
            "input": self.inputs,
            "outcome": self.outcome,
            "payload": dict(self.payload, checks=[check.to_dict() for check in self.checks]),
            "wall_time": round(self.wall_time, 6),
        }
        if self.error is not None:
            data["error"] = self.error
        return data
