"""Commande verify-all : balaye tous les λ de rang <= R et de niveau <= L"""

import argparse
import logging

from weylfusion.basis import check_recursion, count_basis, count_by_recursion, enum_basis, is_member_def1
from weylfusion.characters import (
    fermionic_character,
    resolve_kostka_reading,
    verify_demazure_factorization,
    verify_fermionic_vs_basis,
    verify_grade_zero,
    verify_kostka,
    verify_weyl_symmetry,
)
from weylfusion.commands.base import Command, dimension_payload
from weylfusion.commands.fusion import run_fusion_checks
from weylfusion.fusion import FusionSpec
from weylfusion.lattice import DominantWeight, iter_dominant
from weylfusion.utils.report import CheckResult, Report

logger = logging.getLogger(__name__)

# Dimension ambiante maximale pour l'oracle de fusion
DEFAULT_FUSION_DIM = 36

# Rang maximal du recoupement par la forme « poids décalés »
DEF1_MAX_RANK = 2


def sweep_weights(max_rank: int, max_level: int):
    """Tous les λ non nuls avec r <= max_rank et Σ m_i <= max_level"""
    for rank in range(1, max_rank + 1):
        for weight in iter_dominant(rank, max_level):
            if weight.level > 0:
                yield weight


def check_def1(weight: DominantWeight) -> CheckResult:
    """Chaque élément énuméré appartient aussi à B^r(λ) sous la forme « poids décalés »"""
    count = 0
    for element in enum_basis(weight):
        if not is_member_def1(element):
            return CheckResult("def1", False, {"checked": count}, f"rejeté par la forme décalée: {element.to_dict()}")
        count += 1
    return CheckResult("def1", True, {"checked": count})


def verify_weight(report: Report, weight: DominantWeight, threads: int, max_grade, fusion_dim: int) -> None:
    """Toutes les vérifications pour un poids, préfixées par "r:λ" """
    prefix = f"{weight.rank}:{weight}/"
    
    def add(check: CheckResult) -> None:
        check.name = prefix + check.name
        report.add_check(check)
    
    counts = dimension_payload(weight, threads)
    recursive = count_by_recursion(weight)
    add(CheckResult(
        "dimension", counts["enumerated"] == counts["closed_form"] == recursive,
        dict(counts, recursive=recursive),
        None if counts["enumerated"] == counts["closed_form"] == recursive
        else f"énumération {counts['enumerated']}, récurrence {recursive}, formule close {counts['closed_form']}"
    ))
    
    character = fermionic_character(weight, threads)
    add(verify_fermionic_vs_basis(weight, threads))
    add(verify_grade_zero(weight, character))
    add(verify_demazure_factorization(weight, character))
    add(verify_weyl_symmetry(character))
    add(verify_kostka(weight, character))
    if weight.rank <= DEF1_MAX_RANK:
        add(check_def1(weight))
    if weight.rank >= 2:
        add(check_recursion(weight))
    
    if count_basis(weight) <= fusion_dim:
        indices = weight.fundamental_indices()
        points = tuple(range(len(indices)))
        alt_points = tuple(2 * a + 3 for a in points)
        spec = FusionSpec(weight.rank, indices, points)
        run_fusion_checks(report, spec, max_grade, alt_points, prefix=prefix)


class VerifyAllCommand(Command):
    name = "verify-all"
    help = "exécute toutes les vérifications sur un balayage de poids"
    
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--max-rank", type=int, default=2, help="rang maximal R (défaut 2)")
        parser.add_argument("--max-level", type=int, default=2, help="niveau maximal L = Σ m_i (défaut 2)")
        parser.add_argument("--fusion-dim", type=int, default=DEFAULT_FUSION_DIM,
                            help=f"dimension ambiante maximale de l'oracle de fusion (défaut {DEFAULT_FUSION_DIM})")
    
    async def run(self, args: argparse.Namespace) -> Report:
        report = Report(self.name, {"max_rank": args.max_rank, "max_level": args.max_level})
        swept = []
        for weight in sweep_weights(args.max_rank, args.max_level):
            logger.info(f"Vérification de λ={weight} (r={weight.rank})")
            verify_weight(report, weight, args.threads, args.max_grade, args.fusion_dim)
            swept.append({"rank": weight.rank, "weight": list(weight.m)})
        
        failed = [check.name for check in report.checks if not check.passed]
        reading, common = resolve_kostka_reading(check for check in report.checks if check.name.endswith("/kostka"))
        report.payload.update(
            swept=len(swept), weights=swept, checks_run=len(report.checks), failed=failed,
            kostka_reading=reading, kostka_common_readings=common,
        )
        logger.info(f"{len(swept)} poids balayé(s), {len(report.checks)} vérification(s), {len(failed)} échec(s)")
        return report


def setup(app):
    """Fonction requise pour charger la commande"""
    app.add_command(VerifyAllCommand(app))
