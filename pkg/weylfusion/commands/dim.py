"""Commande dim : cardinal de B^r(λ) contre Π binom(r+1, i)^{m_i}"""

import argparse
import logging

from weylfusion.basis import count_by_recursion
from weylfusion.characters import weyl_dim
from weylfusion.commands.base import Command, add_weight_arguments, dimension_payload, weight_from_args, weight_inputs
from weylfusion.utils.report import CheckResult, Report

logger = logging.getLogger(__name__)


class DimCommand(Command):
    name = "dim"
    help = "compte la base B^r(λ) et la compare à la formule close"
    
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_weight_arguments(parser)
    
    async def run(self, args: argparse.Namespace) -> Report:
        weight = weight_from_args(args)
        report = Report(self.name, weight_inputs(weight))
        
        counts = dimension_payload(weight, args.threads)
        recursive = count_by_recursion(weight)
        report.payload.update(counts, recursive=recursive, weyl_dim=weyl_dim(weight))
        
        report.add_check(CheckResult(
            "dimension", counts["enumerated"] == counts["closed_form"], dict(counts),
            None if counts["enumerated"] == counts["closed_form"]
            else f"énumération {counts['enumerated']}, formule close {counts['closed_form']}"
        ))
        report.add_check(CheckResult(
            "recursive_count", recursive == counts["closed_form"], {"recursive": recursive},
            None if recursive == counts["closed_form"] else f"récurrence {recursive}, formule close {counts['closed_form']}"
        ))
        return report


def setup(app):
    """Fonction requise pour charger la commande"""
    app.add_command(DimCommand(app))
