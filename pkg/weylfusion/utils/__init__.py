"""Utilitaires : exceptions, rapports, mise en forme"""

from .exceptions import WeylError
from .report import CheckResult, Report

__all__ = ["WeylError", "CheckResult", "Report"]
