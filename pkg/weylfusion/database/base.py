"""Interface abstraite pour l'archive des rapports"""

from abc import ABC, abstractmethod
from typing import List, Optional

from weylfusion.database.models import StoredReport
from weylfusion.utils.report import Report


class DatabaseInterface(ABC):
    """Interface abstraite pour la persistance des rapports"""
    
    @abstractmethod
    async def init(self) -> None:
        """Initialise la base de données (création des tables, etc.)"""
        pass
    
    @abstractmethod
    async def save_report(self, report: Report) -> StoredReport:
        """
        Archive un rapport de commande
        
        Args:
            report: Rapport à archiver
            
        Returns:
            Rapport archivé avec son ID
        """
        pass
    
    @abstractmethod
    async def get_report(self, report_id: int) -> Optional[StoredReport]:
        """
        Récupère un rapport par son ID
        
        Returns:
            Rapport ou None si non trouvé
        """
        pass
    
    @abstractmethod
    async def get_recent_reports(self, limit: int = 20, command: Optional[str] = None) -> List[StoredReport]:
        """
        Récupère les rapports les plus récents
        
        Args:
            limit: Nombre maximal de rapports
            command: Filtre facultatif sur le nom de commande
        """
        pass
    
    @abstractmethod
    async def close(self) -> None:
        """Ferme la connexion à la base de données"""
        pass
