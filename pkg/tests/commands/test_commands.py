import math

import pytest

from qfock.commands import CheckResult, FactorialityCommand, TableCommand, VerifyCommand, run_check
from qfock.engine import create_config


def test_check_result_pass_flag():
    assert CheckResult("a", {}, 1e-13, 1e-12).passed
    assert not CheckResult("b", {}, 1e-11, 1e-12).passed
    assert not CheckResult("c", {}, math.nan, 1.0).passed
    exported = CheckResult("d", {"q": 0.5}, 0.0, 1.0, details={"cases": 3}).to_dict()
    assert exported["passed"] is True
    assert exported["details"] == {"cases": 3}


def test_run_check_times_the_callable():
    result = run_check("sample", {"n": 1}, 0.5, lambda: (0.25, {"note": "x"}))
    assert result.residual == 0.25
    assert result.wall_time >= 0.0
    assert result.details == {"note": "x"}


@pytest.mark.parametrize("q", [0.9, -0.5])
def test_identity_suite_passes(q):
    result = VerifyCommand(create_config({"q": q, "max_level": 5})).execute({"type": "VERIFY"})
    failed = [line for line in result["summary"] if line.startswith("FAIL")]
    assert failed == []
    assert result["status"] == "success"
    names = [row[0] for row in result["table"][1]]
    assert names[0] == "pn_positivity"
    assert "creation_norm" in names


def test_identity_suite_is_deterministic():
    config = create_config({"q": 0.5, "max_level": 4, "seed": 3})
    first = VerifyCommand(config).execute({"type": "VERIFY"})
    second = VerifyCommand(config).execute({"type": "VERIFY"})
    assert [row[1] for row in first["table"][1]] == [row[1] for row in second["table"][1]]


def test_factoriality_rejects_letters_outside_the_alphabet():
    with pytest.raises(ValueError):
        FactorialityCommand(create_config({"dim": 2})).execute({"z": "g", "t": "omega"})


def test_table_kinds():
    command = TableCommand(create_config({"q": 0.5}))
    assert command.execute({"kind": "pn", "level": 1})["table"][0] == ["word", "0", "1"]
    assert command.execute({"kind": "moments", "k_max": 4})["report"]["rows"][4]["oracle"] == pytest.approx(2.5)
    estimate = command.execute({"kind": "estimate", "k_min": 5, "k_max": 8})
    assert [row[0] for row in estimate["table"][1]] == [5, 6, 7, 8]
    assert command.execute({"kind": "spectrum"})["status"] == "error"


@pytest.mark.parametrize("q", [-0.9, -0.5, 0.0, 0.5, 0.9])
def test_identity_suite_at_level_eight(q):
    result = VerifyCommand(create_config({"q": q, "max_level": 8, "samples": 10})).execute({"type": "VERIFY"})
    assert [line for line in result["summary"] if line.startswith("FAIL")] == []
    assert result["status"] == "success"


def test_table_pn_at_level_zero():
    result = TableCommand(create_config({"q": 0.5})).execute({"kind": "pn", "level": 0})
    assert result["report"]["symmetrizer"]["n"] == 0
    assert result["report"]["symmetrizer"]["matrix"] == [[1.0]]
    assert "P_0" in result["message"]
