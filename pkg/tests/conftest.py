"""Fixtures partagées de la suite de tests"""

import asyncio
import json

import pytest

from weylfusion.app import WeylFusionApp
from weylfusion.config import Config
from weylfusion.lattice import DominantWeight, WeightVector
from weylfusion.qpoly import QPoly


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch):
    """Aucune archive ni fichier de log hérités de l'environnement"""
    monkeypatch.setattr(Config, "DATABASE_PATH", "")
    monkeypatch.setattr(Config, "LOG_FILE", "")
    monkeypatch.setattr(Config, "THREADS", 1)
    monkeypatch.setattr(Config, "DEFAULT_FORMAT", "json")


@pytest.fixture
def dw():
    """Construit un poids dominant : dw(1, 1) est ω_1 + ω_2 en rang 2"""
    def make(*m):
        return DominantWeight(len(m), tuple(m))
    return make


@pytest.fixture
def wv():
    def make(*c):
        return WeightVector(len(c), tuple(c))
    return make


@pytest.fixture
def poly():
    def make(*coeffs):
        return QPoly(tuple(coeffs))
    return make


@pytest.fixture
def run_cli(capsys):
    """Exécute la ligne de commande ; retourne (code, stdout brut)"""
    def run(*argv):
        code = asyncio.run(WeylFusionApp().run(list(argv)))
        return code, capsys.readouterr().out
    return run


@pytest.fixture
def run_json(run_cli):
    """Exécute la ligne de commande au format JSON ; retourne (code, rapport)"""
    def run(*argv):
        code, out = run_cli(*argv)
        return code, json.loads(out) if out.strip() else None
    return run
