"""Mise en forme des rapports pour la sortie standard"""

import csv
import io
import json
from typing import Iterable, List

from weylfusion.utils.report import Report

CSV_CHARACTER_HEADER = ("weight", "degree", "multiplicity")
CSV_CHECK_HEADER = ("check", "passed", "counterexample")


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False)


def character_rows(character_json: Iterable[dict]) -> List[tuple]:
    """
    Développe le schéma [{"weight": [...], "poly": [...]}] en lignes
    (poids, degré, multiplicité), multiplicités nulles omises
    """
    rows = []
    for entry in character_json:
        weight = ",".join(str(c) for c in entry["weight"])
        for degree, mult in enumerate(entry["poly"]):
            if mult:
                rows.append((weight, degree, mult))
    return rows


def render_csv(report: Report) -> str:
    """
    CSV du caractère gradué si le rapport en contient un,
    sinon une ligne par vérification
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if "character" in report.payload:
        writer.writerow(CSV_CHARACTER_HEADER)
        writer.writerows(character_rows(report.payload["character"]))
    else:
        writer.writerow(CSV_CHECK_HEADER)
        for check in report.checks:
            writer.writerow((check.name, str(check.passed).lower(), check.counterexample or ""))
    return buffer.getvalue()


def render(report: Report, fmt: str = "json") -> str:
    if fmt == "csv":
        return render_csv(report)
    return render_json(report)
