"""Commande kostka : décomposition de ch_t W(λ) et polynômes de Kostka"""

import argparse
import logging
from typing import Optional

from weylfusion.characters import (
    expected_kostka,
    fermionic_character,
    verify_demazure_factorization,
    verify_kostka,
)
from weylfusion.commands.base import Command, add_weight_arguments, dimension_payload, weight_from_args, weight_inputs
from weylfusion.lattice import DominantWeight, Partition, parse_partition, weight_to_partition
from weylfusion.qpoly import QPoly
from weylfusion.utils.exceptions import InvalidWeight, PartitionTooLong
from weylfusion.utils.report import CheckResult, Report

logger = logging.getLogger(__name__)


def coefficient_check(weight: DominantWeight, xi: Partition, decomposition: dict, reading: Optional[str]) -> CheckResult:
    """
    c_ξ(t) isolé, comparé au polynôme de Kostka de la lecture retenue

    Raises:
        InvalidWeight: Si |ξ| diffère de |ξ^λ|
        PartitionTooLong: Si ξ a plus de r+1 parts
    """
    size = weight_to_partition(weight).size
    if xi.size != size:
        raise InvalidWeight(f"La partition {xi} est de taille {xi.size}, taille {size} attendue")
    if xi.length > weight.rank + 1:
        raise PartitionTooLong(xi.parts, weight.rank)

    got = QPoly(tuple(decomposition.get(str(xi), [])))
    details = {"partition": str(xi), "coefficient": got.to_list(), "reading": reading}
    if reading is None:
        return CheckResult("kostka_coefficient", False, details, "aucune lecture compatible")
    want = expected_kostka(weight, xi, *reading.split("/"))
    details["kostka"] = want.to_list()
    return CheckResult(
        "kostka_coefficient", got == want, details,
        None if got == want else f"ξ={xi}: décomposition {got}, Kostka {want}"
    )


class KostkaCommand(Command):
    name = "kostka"
    help = "compare la décomposition de ch_t W(λ) aux polynômes de Kostka"
    
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_weight_arguments(parser)
        parser.add_argument("--partition", default=None,
                            help="partition ξ dont le coefficient c_ξ(t) est isolé (ex. \"[2,1]\")")
    
    async def run(self, args: argparse.Namespace) -> Report:
        weight = weight_from_args(args)
        xi = parse_partition(args.partition) if args.partition is not None else None
        inputs = weight_inputs(weight)
        if xi is not None:
            inputs["partition"] = str(xi)
        report = Report(self.name, inputs)
        report.payload.update(dimension_payload(weight, args.threads))
        
        character = fermionic_character(weight, args.threads)
        kostka_check = report.add_check(verify_kostka(weight, character))
        report.add_check(verify_demazure_factorization(weight, character))
        reading = kostka_check.details["selected"]
        if not kostka_check.details["discriminating"]:
            logger.info(f"λ={weight} ne départage pas les lectures de Kostka")
        report.payload.update(
            decomposition=kostka_check.details["decomposition"],
            kostka_reading=reading,
            discriminating=kostka_check.details["discriminating"],
            top_grade=character.top_grade(),
        )
        if xi is not None:
            report.add_check(coefficient_check(weight, xi, kostka_check.details["decomposition"], reading))
        return report


def setup(app):
    """Fonction requise pour charger la commande"""
    app.add_command(KostkaCommand(app))
