import asyncio

import pytest

from weylfusion.app import WeylFusionApp
from weylfusion.config import Config
from weylfusion.utils.formatting import CSV_CHARACTER_HEADER


class TestDim:
    def test_rank_two(self, run_json):
        code, report = run_json("dim", "--weight", "2,1")
        assert code == Config.EXIT_PASS
        assert report["command"] == "dim"
        assert report["input"] == {"rank": 2, "weight": [2, 1]}
        assert report["outcome"] == "pass"
        assert report["payload"]["enumerated"] == report["payload"]["closed_form"] == 27
        assert report["payload"]["weyl_dim"] == 15

    def test_zero_weight(self, run_json):
        code, report = run_json("dim", "--weight", "0")
        assert code == 0
        assert report["payload"]["enumerated"] == 1

    def test_rank_three_with_threads(self, run_json):
        code, report = run_json("dim", "--weight", "1,1,1", "--threads", "2")
        assert code == 0
        assert report["payload"]["closed_form"] == 96
        assert report["payload"]["recursive"] == 96

    @pytest.mark.parametrize("weight", ["2,x", "1,-1", ""])
    def test_bad_weight(self, run_cli, weight):
        code, out = run_cli("dim", "--weight", weight)
        assert code == Config.EXIT_USAGE
        assert out == ""

    def test_rank_mismatch(self, run_cli):
        code, _ = run_cli("dim", "--weight", "1,1", "--rank", "3")
        assert code == Config.EXIT_USAGE


class TestCharacter:
    def test_json_payload(self, run_json):
        code, report = run_json("character", "--weight", "2")
        assert code == 0
        payload = report["payload"]
        assert payload["top_grade"] == 1
        assert payload["graded_dimension"] == [3, 1]
        names = {check["name"] for check in payload["checks"]}
        assert {"fermionic_vs_basis", "dimension", "grade_zero", "weyl_symmetry"} <= names

    def test_csv(self, run_cli):
        code, out = run_cli("character", "--weight", "2", "--format", "csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == ",".join(CSV_CHARACTER_HEADER)
        assert set(lines[1:]) == {"2,0,1", "0,0,1", "0,1,1", "-2,0,1"}


class TestKostka:
    def test_selected_reading(self, run_json):
        code, report = run_json("kostka", "--weight", "2")
        assert code == 0
        assert report["payload"]["kostka_reading"] == "column/charge"
        assert report["payload"]["decomposition"] == {"[2]": [1], "[1,1]": [0, 1]}
        assert report["payload"]["discriminating"] is True

    def test_rank_two(self, run_json):
        code, report = run_json("kostka", "--weight", "1,1")
        assert code == 0
        assert report["outcome"] == "pass"

    @pytest.mark.parametrize("weight", ["0", "1,0", "0,1", "0,0"])
    def test_single_term_weight_keeps_reading(self, run_json, weight):
        code, report = run_json("kostka", "--weight", weight)
        assert code == 0
        assert report["payload"]["kostka_reading"] == "column/charge"
        assert report["payload"]["discriminating"] is False

    def test_partition_coefficient(self, run_json):
        code, report = run_json("kostka", "--weight", "1,1", "--partition", "[1,1,1]")
        assert code == 0
        assert report["input"]["partition"] == "[1,1,1]"
        check = next(c for c in report["payload"]["checks"] if c["name"] == "kostka_coefficient")
        assert check["passed"]
        assert check["details"]["coefficient"] == [0, 1]
        assert check["details"]["kostka"] == [0, 1]

    def test_partition_top_coefficient(self, run_json):
        code, report = run_json("kostka", "--weight", "1,0", "--partition", "[1]")
        assert code == 0
        check = report["payload"]["checks"][-1]
        assert check["details"]["coefficient"] == [1]

    @pytest.mark.parametrize("argv", [
        ("--weight", "1,0", "--partition", "[2]"),
        ("--weight", "1,0", "--partition", "[1,a]"),
        ("--weight", "3", "--partition", "[1,1,1]"),
    ])
    def test_bad_partition(self, run_cli, argv):
        code, out = run_cli("kostka", *argv)
        assert code == Config.EXIT_USAGE
        assert out == ""


class TestFusion:
    def test_sl2(self, run_json):
        code, report = run_json("fusion", "r=1; factors=w1@0,w1@1", "--alt-points=3,7")
        assert code == 0
        assert report["input"]["alt_points"] == [3, 7]
        assert report["payload"]["profile"] == [3, 4]
        names = [check["name"] for check in report["payload"]["checks"]]
        assert "oracle_vs_fermionic" in names
        assert "point_independence" in names

    def test_rank_option_and_points(self, run_json):
        code, report = run_json("fusion", "factors=w1,w2", "--rank", "2", "--points", "4,9")
        assert code == 0
        assert report["input"]["points"] == [4, 9]
        assert report["payload"]["enumerated"] == 9

    def test_repeated_points(self, run_cli):
        code, out = run_cli("fusion", "r=1; factors=w1@2,w1@2")
        assert code == Config.EXIT_USAGE
        assert out == ""

    def test_grade_bound_is_a_failure(self, run_json):
        code, report = run_json("fusion", "r=1; factors=w1,w1,w1", "--max-grade", "1")
        assert code == Config.EXIT_MISMATCH
        assert report["outcome"] == "fail"
        assert "error" in report


class TestVerifyAll:
    def test_small_sweep(self, run_json):
        code, report = run_json("verify-all", "--max-rank", "1", "--max-level", "2")
        assert code == 0, report["payload"]["failed"]
        assert report["payload"]["swept"] == 2
        assert report["payload"]["failed"] == []
        assert any(name.endswith("oracle_vs_fermionic") for name in
                   (check["name"] for check in report["payload"]["checks"]))

    def test_small_sweep_rank_two(self, run_json):
        code, report = run_json("verify-all", "--max-rank", "2", "--max-level", "1")
        assert code == 0, report["payload"]["failed"]
        names = [check["name"] for check in report["payload"]["checks"]]
        assert {"1:1/def1", "2:1,0/def1", "2:0,1/def1"} <= set(names)
        assert all(check["passed"] for check in report["payload"]["checks"] if check["name"].endswith("/def1"))
        assert report["payload"]["kostka_reading"] == "column/charge"
        assert report["payload"]["kostka_common_readings"] == [
            "partition/charge", "partition/cocharge", "column/charge", "column/cocharge",
        ]

    def test_sweep_resolves_kostka_reading(self, run_json):
        code, report = run_json("verify-all", "--max-rank", "1", "--max-level", "2")
        assert code == 0
        assert report["payload"]["kostka_common_readings"] == ["column/charge"]
        assert report["payload"]["kostka_reading"] == "column/charge"
        assert sum(name.endswith("/def1") for name in
                   (check["name"] for check in report["payload"]["checks"])) == 2

    def test_empty_sweep(self, run_json):
        code, report = run_json("verify-all", "--max-rank", "2", "--max-level", "0")
        assert code == 0
        assert report["payload"]["swept"] == 0

    @pytest.mark.slow
    def test_default_sweep(self, run_json):
        code, report = run_json("verify-all")
        assert code == 0, report["payload"]["failed"]


class TestHistory:
    def test_reports_are_archived(self, run_json, tmp_path):
        database = str(tmp_path / "reports.db")
        run_json("dim", "--weight", "1,1", "--database", database)
        run_json("character", "--weight", "1", "--database", database)
        code, report = run_json("history", "--database", database)
        assert code == 0
        assert [item["command"] for item in report["payload"]["reports"]] == ["character", "dim"]

        _, filtered = run_json("history", "--database", database, "--command", "dim")
        assert len(filtered["payload"]["reports"]) == 1
        assert filtered["payload"]["reports"][0]["input"]["weight"] == [1, 1]

    def test_history_is_not_archived(self, run_json, tmp_path):
        database = str(tmp_path / "reports.db")
        run_json("history", "--database", database)
        _, report = run_json("history", "--database", database)
        assert report["payload"]["reports"] == []

    def test_without_database(self, run_json):
        code, report = run_json("history")
        assert code == 0
        assert report["payload"]["reports"] == []


class TestUsage:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as excinfo:
            asyncio.run(WeylFusionApp().run(["explode"]))
        assert excinfo.value.code == 2

    def test_bad_threads(self):
        with pytest.raises(SystemExit) as excinfo:
            asyncio.run(WeylFusionApp().run(["dim", "--weight", "1", "--threads", "0"]))
        assert excinfo.value.code == 2
