"""Point d'entrée principal de weylfusion"""

import asyncio
import logging
import sys
from typing import List, Optional

from weylfusion.app import WeylFusionApp
from weylfusion.config import Config


def setup_logging(level: str = "INFO", log_file: str = "") -> None:
    """Configure le système de logging (stderr, la sortie standard est réservée aux rapports)"""
    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    date_format = "%Y-%m-%d %H:%M:%S"
    
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format=log_format,
        datefmt=date_format,
        handlers=handlers,
        force=True,
    )
    
    # Réduire le niveau de log des dépendances
    logging.getLogger("aiosqlite").setLevel(logging.WARNING)


def main(argv: Optional[List[str]] = None) -> int:
    """Fonction principale, retourne le code de sortie"""
    setup_logging(Config.LOG_LEVEL, Config.LOG_FILE)
    logger = logging.getLogger(__name__)
    
    try:
        Config.validate()
    except ValueError as e:
        logger.error(f"Erreur de configuration: {e}")
        return Config.EXIT_USAGE
    
    app = WeylFusionApp()
    try:
        return asyncio.run(app.run(argv))
    except KeyboardInterrupt:
        logger.info("Interruption par l'utilisateur (Ctrl+C)")
        return Config.EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
