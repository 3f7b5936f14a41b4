"""Application en ligne de commande : chargement des commandes et gestion des erreurs"""

import argparse
import importlib
import logging
import sys
import time
from typing import Dict, List, Optional

from weylfusion import __version__
from weylfusion.commands.base import Command
from weylfusion.config import Config
from weylfusion.database.sqlite import SQLiteDatabase
from weylfusion.utils.exceptions import USAGE_ERRORS, WeylError
from weylfusion.utils.formatting import render
from weylfusion.utils.report import Report

logger = logging.getLogger(__name__)

COMMAND_MODULES = [
    "weylfusion.commands.dim",          # Cardinal de la base
    "weylfusion.commands.character",    # Caractère gradué
    "weylfusion.commands.kostka",       # Polynômes de Kostka
    "weylfusion.commands.fusion",       # Oracle de fusion
    "weylfusion.commands.verify_all",   # Balayage complet
    "weylfusion.commands.history",      # Archive des rapports
]


class WeylFusionApp:
    """Ligne de commande weylfusion"""
    
    def __init__(self):
        self.commands: Dict[str, Command] = {}
        self.db: Optional[SQLiteDatabase] = None
        
        self.parser = argparse.ArgumentParser(
            prog="weylfusion",
            description="Bases, caractères gradués et produits de fusion des modules de Weyl de sl_{r+1}[t]",
        )
        self.parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        self._subparsers = self.parser.add_subparsers(dest="command", required=True)
        
        # Options communes à toutes les commandes
        self._common = argparse.ArgumentParser(add_help=False)
        self._common.add_argument("--format", choices=Config.OUTPUT_FORMATS, default=Config.DEFAULT_FORMAT,
                                  help=f"format de sortie (défaut {Config.DEFAULT_FORMAT})")
        self._common.add_argument("--threads", type=int, default=Config.THREADS,
                                  help=f"parallélisme de l'énumération (défaut {Config.THREADS})")
        self._common.add_argument("--max-grade", type=int, default=Config.MAX_GRADE,
                                  help=f"borne de sécurité de la clôture de fusion (défaut {Config.MAX_GRADE})")
        self._common.add_argument("--database", default=Config.DATABASE_PATH if Config.has_database() else None,
                                  help="fichier SQLite d'archive des rapports (défaut WEYLFUSION_DATABASE_PATH)")
        
        self._load_commands()
    
    def _load_commands(self) -> None:
        """Charge dynamiquement les modules de commandes"""
        for name in COMMAND_MODULES:
            module = importlib.import_module(name)
            module.setup(self)
            logger.debug(f"Commande chargée: {name}")
    
    def add_command(self, command: Command) -> None:
        parser = self._subparsers.add_parser(command.name, help=command.help, parents=[self._common])
        command.add_arguments(parser)
        self.commands[command.name] = command
    
    def _check_arguments(self, args: argparse.Namespace) -> None:
        if args.threads < 1:
            self.parser.error("--threads doit être au moins 1")
        if args.max_grade < 1:
            self.parser.error("--max-grade doit être au moins 1")
    
    async def run(self, argv: Optional[List[str]] = None) -> int:
        """
        Exécute une commande et écrit son rapport sur la sortie standard
        
        Returns:
            Code de sortie : 0 si tout passe, 1 en cas d'écart ou d'erreur de calcul,
            2 en cas d'erreur d'utilisation
        """
        args = self.parser.parse_args(argv)
        self._check_arguments(args)
        command = self.commands[args.command]
        
        if args.database:
            self.db = SQLiteDatabase(args.database)
            await self.db.init()
        
        start = time.perf_counter()
        try:
            report = await command.run(args)
        except Exception as error:
            report = self.on_command_error(command, args, error)
            if report is None:
                await self.close()
                return Config.EXIT_USAGE
        report.wall_time = time.perf_counter() - start
        
        print(render(report, args.format), end="" if args.format == "csv" else "\n")
        logger.info(f"Commande {command.name}: {report.outcome} en {report.wall_time:.3f}s")
        
        if self.db and command.archived:
            await self.db.save_report(report)
        await self.close()
        return report.exit_code
    
    def on_command_error(self, command: Command, args: argparse.Namespace, error: Exception) -> Optional[Report]:
        """
        Gestionnaire d'erreurs global des commandes
        
        Returns:
            Un rapport d'échec, ou None pour une erreur d'utilisation
        """
        if isinstance(error, USAGE_ERRORS):
            logger.error(f"Entrée invalide: {error.message}")
            print(f"weylfusion {command.name}: erreur: {error.message}", file=sys.stderr)
            return None
        
        if isinstance(error, WeylError):
            logger.error(f"Erreur de calcul dans {command.name}: {error.message}")
            return Report(command.name, {"argv": vars(args).copy()}, error=error.message)
        
        logger.error(f"Erreur non gérée dans la commande {command.name}: {error}", exc_info=error)
        return Report(command.name, {"argv": vars(args).copy()}, error=f"Erreur inattendue: {error}")
    
    async def close(self) -> None:
        if self.db:
            await self.db.close()
            self.db = None
