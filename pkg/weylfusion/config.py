"""Configuration de weylfusion"""

import os
from typing import Optional

from dotenv import load_dotenv

# Charger les variables d'environnement
load_dotenv()


def env_int(name: str, default: int) -> Optional[int]:
    """Lit une variable entière ; None si la valeur n'est pas un entier (signalé par validate)"""
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return None


class Config:
    """Configuration centralisée de l'outil"""
    
    # Parallélisme de l'énumération (1 = sortie déterministe)
    THREADS: Optional[int] = env_int("WEYLFUSION_THREADS", 1)
    
    # Borne de sécurité sur le grade lors de la clôture des modules de fusion
    MAX_GRADE: Optional[int] = env_int("WEYLFUSION_MAX_GRADE", 64)
    
    # Logging
    LOG_LEVEL: str = os.getenv("WEYLFUSION_LOG_LEVEL", "INFO").upper()
    LOG_FILE: str = os.getenv("WEYLFUSION_LOG_FILE", "")
    
    # Archive des rapports (vide = désactivée)
    DATABASE_PATH: str = os.getenv("WEYLFUSION_DATABASE_PATH", "")
    
    # Sortie
    DEFAULT_FORMAT: str = os.getenv("WEYLFUSION_DEFAULT_FORMAT", "json")
    OUTPUT_FORMATS = ("json", "csv")
    LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
    
    # Codes de sortie
    EXIT_PASS: int = 0
    EXIT_MISMATCH: int = 1
    EXIT_USAGE: int = 2
    
    @classmethod
    def validate(cls) -> bool:
        """Valide que la configuration est correcte"""
        if cls.THREADS is None:
            raise ValueError(f"WEYLFUSION_THREADS doit être un entier: {os.getenv('WEYLFUSION_THREADS')!r}")
        if cls.MAX_GRADE is None:
            raise ValueError(f"WEYLFUSION_MAX_GRADE doit être un entier: {os.getenv('WEYLFUSION_MAX_GRADE')!r}")
        
        if cls.THREADS < 1:
            raise ValueError("WEYLFUSION_THREADS doit être au moins 1")
        
        if cls.MAX_GRADE < 1:
            raise ValueError("WEYLFUSION_MAX_GRADE doit être au moins 1")
        
        if cls.DEFAULT_FORMAT not in cls.OUTPUT_FORMATS:
            raise ValueError(f"WEYLFUSION_DEFAULT_FORMAT inconnu: {cls.DEFAULT_FORMAT}")
        
        if cls.LOG_LEVEL not in cls.LOG_LEVELS:
            raise ValueError(f"WEYLFUSION_LOG_LEVEL inconnu: {cls.LOG_LEVEL}")
        
        return True
    
    @classmethod
    def has_database(cls) -> bool:
        """Vérifie si l'archive des rapports est configurée"""
        return bool(cls.DATABASE_PATH)
