import pytest

from weylfusion.config import Config, env_int
from weylfusion.main import main


class TestEnvInt:
    def test_default(self, monkeypatch):
        monkeypatch.delenv("WEYLFUSION_THREADS", raising=False)
        assert env_int("WEYLFUSION_THREADS", 1) == 1

    def test_integer_value(self, monkeypatch):
        monkeypatch.setenv("WEYLFUSION_THREADS", "4")
        assert env_int("WEYLFUSION_THREADS", 1) == 4

    @pytest.mark.parametrize("value", ["abc", "2.5", ""])
    def test_non_integer_value(self, monkeypatch, value):
        monkeypatch.setenv("WEYLFUSION_THREADS", value)
        assert env_int("WEYLFUSION_THREADS", 1) is None


class TestValidate:
    def test_defaults_are_valid(self):
        assert Config.validate()

    @pytest.mark.parametrize("attribute", ["THREADS", "MAX_GRADE"])
    def test_non_integer_setting(self, monkeypatch, attribute):
        monkeypatch.setattr(Config, attribute, None)
        with pytest.raises(ValueError, match="doit être un entier"):
            Config.validate()

    def test_unknown_format(self, monkeypatch):
        monkeypatch.setattr(Config, "DEFAULT_FORMAT", "xml")
        with pytest.raises(ValueError):
            Config.validate()


class TestMain:
    def test_non_integer_threads_is_a_usage_error(self, monkeypatch, capsys):
        monkeypatch.setenv("WEYLFUSION_THREADS", "beaucoup")
        monkeypatch.setattr(Config, "THREADS", env_int("WEYLFUSION_THREADS", 1))
        assert main(["dim", "--weight", "1"]) == Config.EXIT_USAGE
        assert capsys.readouterr().out == ""

    def test_valid_configuration_runs(self, capsys):
        assert main(["dim", "--weight", "1"]) == Config.EXIT_PASS
        assert '"command": "dim"' in capsys.readouterr().out
