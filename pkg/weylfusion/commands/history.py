"""Commande history : derniers rapports archivés"""

import argparse
import logging

from weylfusion.commands.base import Command
from weylfusion.utils.report import Report

logger = logging.getLogger(__name__)


class HistoryCommand(Command):
    name = "history"
    help = "liste les derniers rapports archivés"
    archived = False
    
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--limit", type=int, default=20, help="nombre de rapports (défaut 20)")
        parser.add_argument("--command", dest="filter_command", default=None, help="filtre sur le nom de commande")
    
    async def run(self, args: argparse.Namespace) -> Report:
        report = Report(self.name, {"limit": args.limit, "command": args.filter_command})
        if self.app.db is None:
            logger.warning("Aucune archive configurée (WEYLFUSION_DATABASE_PATH ou --database)")
            report.payload["reports"] = []
            return report
        
        stored = await self.app.db.get_recent_reports(args.limit, args.filter_command)
        for item in stored:
            logger.info(item.summary)
        report.payload["reports"] = [item.to_dict() for item in stored]
        return report


def setup(app):
    """Fonction requise pour charger la commande"""
    app.add_command(HistoryCommand(app))
