import pytest

from qfock.engine import ArgParser, create_config, parse_letter, parse_word
from qfock.settings import DIM_CAP_ENV
from qfock.utils.errors import UsageError


def test_defaults():
    config = create_config()
    assert (config.q, config.dim, config.max_level, config.steps) == (0.5, 2, 6, 6)
    assert config.format == "json"
    assert config.report_path is None
    assert config.to_dict()["tol"] == 1e-10
    assert config.samples == 100


def test_overrides_skip_missing_values():
    config = create_config({"q": -0.3, "dim": None, "seed": 7})
    assert config.q == -0.3
    assert config.dim == 2
    assert config.seed == 7


def test_dim_cap_comes_from_the_environment(monkeypatch):
    monkeypatch.setenv(DIM_CAP_ENV, "512")
    assert create_config().dim_cap == 512
    monkeypatch.setenv(DIM_CAP_ENV, "0")
    with pytest.raises(ValueError):
        create_config()


@pytest.mark.parametrize("overrides", [
    {"q": 1.0},
    {"q": -1.0},
    {"dim": 0},
    {"max_level": 0},
    {"tol": 0.0},
    {"steps": -1},
    {"samples": 0},
    {"format": "xml"},
    {"colour": "red"},
    {"dim_cap": 10},
])
def test_invalid_configuration(overrides):
    with pytest.raises(ValueError):
        create_config(overrides)


@pytest.mark.parametrize("token, letter", [("e", 0), ("F", 1), ("g", 2), ("h", 3), ("e7", 7)])
def test_letters(token, letter):
    assert parse_letter(token) == letter


def test_words():
    assert parse_word("e,f") == (0, 1)
    assert parse_word("omega") == ()
    assert parse_word(" Ω ") == ()
    assert parse_word("f, e, e") == (1, 0, 0)
    with pytest.raises(UsageError):
        parse_word("x")
    with pytest.raises(UsageError):
        parse_word("g", dim=2)


def test_parse_collects_config_and_extras():
    parsed = ArgParser().parse(["factoriality", "--q", "0.25", "--max-level", "9", "--t", "e,f"])
    assert parsed["type"] == "FACTORIALITY"
    assert parsed["config"]["q"] == 0.25
    assert parsed["config"]["max_level"] == 9
    assert parsed["config"]["dim"] is None
    assert parsed["z"] == "f"
    assert parsed["t"] == "e,f"


def test_parse_table_options():
    parsed = ArgParser().parse(["table", "estimate", "--k-min", "6", "--k-max", "12", "--report", "out.json"])
    assert parsed["kind"] == "estimate"
    assert (parsed["k_min"], parsed["k_max"]) == (6, 12)
    assert parsed["config"]["report_path"] == "out.json"


@pytest.mark.parametrize("argv", [[], ["table"], ["verify", "--q", "half"], ["solve"]])
def test_parse_errors(argv):
    assert "error" in ArgParser().parse(argv)


def test_parse_sample_count():
    parsed = ArgParser().parse(["verify", "--samples", "25"])
    assert parsed["config"]["samples"] == 25
    assert create_config(parsed["config"]).samples == 25
