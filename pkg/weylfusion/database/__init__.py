"""Archive des rapports de vérification"""

from .models import StoredReport
from .base import DatabaseInterface
from .sqlite import SQLiteDatabase

__all__ = ["StoredReport", "DatabaseInterface", "SQLiteDatabase"]
