"""Commande fusion : oracle par algèbre linéaire exacte contre la formule fermionique"""

import argparse
import logging
from typing import Optional

from weylfusion.characters import fermionic_character, verify_weyl_symmetry
from weylfusion.commands.base import Command, dimension_payload
from weylfusion.fusion import (
    GENERATOR_KINDS,
    FusionSpec,
    fusion_filtration,
    parse_fusion_spec,
    parse_points,
    point_independence,
    vandermonde_relation,
)
from weylfusion.utils.report import CheckResult, Report

logger = logging.getLogger(__name__)


def run_fusion_checks(
    report: Report,
    spec: FusionSpec,
    max_grade: Optional[int],
    alt_points=None,
    prefix: str = "",
) -> None:
    """
    Ajoute au rapport les vérifications d'un produit de fusion :
    invariants des modules, relation de Vandermonde, égalité avec
    ch_t W(λ) et, si demandé, indépendance vis-à-vis des points
    """
    factors = spec.factors()
    weight = spec.highest_weight
    
    for factor in {f.index: f for f in factors}.values():
        check = factor.module.check_invariants()
        check.name = f"{prefix}module_invariants[w{factor.index}]"
        report.add_check(check)
    
    related = [(kind, i) for kind in GENERATOR_KINDS for i in range(1, spec.rank + 1)
               if not vandermonde_relation(factors, (kind, i))]
    report.add_check(CheckResult(
        f"{prefix}vandermonde", not related, {"degree": len(factors)},
        f"générateurs hors relation: {related}" if related else None
    ))
    
    space = fusion_filtration(factors, max_grade)
    oracle = space.graded_character()
    expected = fermionic_character(weight)
    same = oracle == expected
    counterexample = None
    if not same:
        bad = next(w for w in set(oracle.table) | set(expected.table) if oracle[w] != expected[w])
        counterexample = f"poids {bad}: oracle {oracle[bad]}, formule fermionique {expected[bad]}"
    report.add_check(CheckResult(
        f"{prefix}oracle_vs_fermionic", same,
        {"profile": space.profile(), "top_grade": space.top_grade, "ambient_dim": space.ambient_dim},
        counterexample
    ))
    symmetry = verify_weyl_symmetry(oracle)
    symmetry.name = f"{prefix}{symmetry.name}"
    report.add_check(symmetry)
    
    if alt_points is not None:
        independence = point_independence(factors, alt_points, max_grade)
        independence.name = f"{prefix}{independence.name}"
        report.add_check(independence)
    
    if not prefix:
        report.payload.update(
            profile=space.profile(),
            top_grade=space.top_grade,
            character=oracle.to_json(),
        )


class FusionCommand(Command):
    name = "fusion"
    help = "construit un produit de fusion de modules fondamentaux et le compare à ch_t W(λ)"
    
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("spec", help="spécification, ex. \"r=2; factors=w1@0,w1@1,w2@5\"")
        parser.add_argument("--rank", type=int, default=None, help="rang r si absent de la spécification")
        parser.add_argument("--points", default=None, help="points d'évaluation a1,...,ak (défaut 0,...,k-1)")
        parser.add_argument("--alt-points", default=None, help="second jeu de points pour le test d'indépendance")
    
    async def run(self, args: argparse.Namespace) -> Report:
        points = parse_points(args.points) if args.points else None
        spec = parse_fusion_spec(args.spec, points, args.rank)
        alt_points = spec.with_points(parse_points(args.alt_points)).points if args.alt_points else None
        weight = spec.highest_weight
        
        inputs = {"spec": str(spec), "rank": spec.rank, "weight": list(weight.m), "points": list(spec.points)}
        if alt_points is not None:
            inputs["alt_points"] = list(alt_points)
        report = Report(self.name, inputs)
        report.payload.update(dimension_payload(weight, args.threads))
        
        logger.info(f"Produit de fusion {spec}")
        run_fusion_checks(report, spec, args.max_grade, alt_points)
        return report


def setup(app):
    """Fonction requise pour charger la commande"""
    app.add_command(FusionCommand(app))
