"""Implémentation SQLite de l'archive des rapports"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import List, Optional

import aiosqlite

from weylfusion.config import Config
from weylfusion.database.base import DatabaseInterface
from weylfusion.database.models import StoredReport
from weylfusion.utils.report import Report

logger = logging.getLogger(__name__)

_COLUMNS = "id, command, input, outcome, payload, wall_time, created_at"


class SQLiteDatabase(DatabaseInterface):
    """Implémentation SQLite de l'archive"""
    
    def __init__(self, db_path: str = None):
        """
        Args:
            db_path: Chemin vers le fichier de base de données
        """
        self.db_path = db_path or Config.DATABASE_PATH
        self.connection: Optional[aiosqlite.Connection] = None
    
    async def init(self) -> None:
        """Initialise la base de données et crée les tables"""
        try:
            if self.db_path != ":memory:":
                Path(self.db_path).parent.mkdir(parents=True, exist_ok=True)
            
            self.connection = await aiosqlite.connect(self.db_path)
            await self._create_tables()
            
            logger.info(f"Base de données initialisée: {self.db_path}")
            
        except Exception as e:
            logger.error(f"Erreur lors de l'initialisation de la base de données: {e}")
            raise
    
    async def _create_tables(self) -> None:
        async with self.connection.cursor() as cursor:
            await cursor.execute("""
                CREATE TABLE IF NOT EXISTS reports (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    command TEXT NOT NULL,
                    input TEXT NOT NULL,
                    outcome TEXT NOT NULL,
                    payload TEXT NOT NULL,
                    wall_time REAL DEFAULT 0,
                    created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
                )
            """)
            
            await cursor.execute("""
                CREATE INDEX IF NOT EXISTS idx_reports_command
                ON reports(command, created_at)
            """)
            
            await self.connection.commit()
    
    @staticmethod
    def _from_row(row) -> StoredReport:
        return StoredReport(
            id=row[0],
            command=row[1],
            inputs=json.loads(row[2]),
            outcome=row[3],
            payload=json.loads(row[4]),
            wall_time=row[5],
            created_at=datetime.fromisoformat(row[6]),
        )
    
    async def save_report(self, report: Report) -> StoredReport:
        """Archive un rapport"""
        data = report.to_dict()
        stored = StoredReport(
            id=None,
            command=report.command,
            inputs=data["input"],
            outcome=data["outcome"],
            payload=data["payload"],
            wall_time=report.wall_time,
        )
        async with self.connection.cursor() as cursor:
            await cursor.execute("""
                INSERT INTO reports (command, input, outcome, payload, wall_time, created_at)
                VALUES (?, ?, ?, ?, ?, ?)
            """, (
                stored.command,
                json.dumps(stored.inputs),
                stored.outcome,
                json.dumps(stored.payload),
                stored.wall_time,
                stored.created_at.isoformat(),
            ))
            
            stored.id = cursor.lastrowid
            await self.connection.commit()
        
        logger.debug(f"Rapport archivé: {stored.command} (ID: {stored.id})")
        return stored
    
    async def get_report(self, report_id: int) -> Optional[StoredReport]:
        """Récupère un rapport par son ID"""
        async with self.connection.cursor() as cursor:
            await cursor.execute(f"SELECT {_COLUMNS} FROM reports WHERE id = ?", (report_id,))
            row = await cursor.fetchone()
            return self._from_row(row) if row else None
    
    async def get_recent_reports(self, limit: int = 20, command: Optional[str] = None) -> List[StoredReport]:
        """Récupère les rapports les plus récents, du plus récent au plus ancien"""
        async with self.connection.cursor() as cursor:
            if command:
                await cursor.execute(f"""
                    SELECT {_COLUMNS} FROM reports
                    WHERE command = ?
                    ORDER BY id DESC LIMIT ?
                """, (command, limit))
            else:
                await cursor.execute(f"""
                    SELECT {_COLUMNS} FROM reports
                    ORDER BY id DESC LIMIT ?
                """, (limit,))
            
            rows = await cursor.fetchall()
            return [self._from_row(row) for row in rows]
    
    async def close(self) -> None:
        """Ferme la connexion à la base de données"""
        if self.connection:
            await self.connection.close()
            self.connection = None
            logger.info("Connexion à la base de données fermée")
