"""Commande character : formule fermionique, recoupée avec la base énumérée"""

import argparse
import logging

from weylfusion.characters import (
    character_from_basis,
    fermionic_character,
    verify_dimension,
    verify_grade_zero,
    verify_weyl_symmetry,
)
from weylfusion.basis import count_basis
from weylfusion.commands.base import Command, add_weight_arguments, weight_from_args, weight_inputs
from weylfusion.utils.report import CheckResult, Report

logger = logging.getLogger(__name__)


class CharacterCommand(Command):
    name = "character"
    help = "calcule ch_t W(λ) par la formule fermionique et par la base"
    
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_weight_arguments(parser)
    
    async def run(self, args: argparse.Namespace) -> Report:
        weight = weight_from_args(args)
        report = Report(self.name, weight_inputs(weight))
        
        fermionic = fermionic_character(weight, args.threads)
        from_basis = character_from_basis(weight, args.threads)
        logger.info(f"Caractère de W({weight}): {len(fermionic)} poids, grade maximal {fermionic.top_grade()}")
        
        report.payload.update(
            enumerated=from_basis.mass(),
            closed_form=count_basis(weight),
            top_grade=fermionic.top_grade(),
            graded_dimension=fermionic.graded_dimension().to_list(),
            character=fermionic.to_json(),
        )
        
        same = fermionic == from_basis
        report.add_check(CheckResult(
            "fermionic_vs_basis", same, {},
            None if same else "la formule fermionique et la base donnent des caractères différents"
        ))
        report.add_check(verify_dimension(weight, fermionic))
        report.add_check(verify_grade_zero(weight, fermionic))
        report.add_check(verify_weyl_symmetry(fermionic))
        return report


def setup(app):
    """Fonction requise pour charger la commande"""
    app.add_command(CharacterCommand(app))
