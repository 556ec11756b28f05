import math

import pytest

from qfock.combinatorics import q_integer
from qfock.harness import key_estimate_check

E, F = 0, 1


@pytest.mark.parametrize("q", [0.5, -0.5, 0.9])
def test_single_foreign_letter(q):
    report = key_estimate_check([F], [F], range(5, 21), q)
    assert report.passed
    for row in report.rows:
        assert row.ratio == pytest.approx(1 / (abs(q) * math.sqrt(q_integer(row.k, q))), rel=1e-9)
        assert row.lhs <= row.rhs


def test_absent_letter_gives_zero():
    report = key_estimate_check([F], [E], range(5, 11), 0.5)
    assert all(row.lhs == 0.0 for row in report.rows)
    assert report.passed


def test_e_annihilations_before_the_foreign_letter():
    q = 0.5
    report = key_estimate_check([E, F], [F, E], range(4, 12), q, dim=3)
    for row in report.rows:
        # [k-1]_q q^(k-2) sqrt([k-2]_q!) against q^k sqrt([k]_q!)
        expected = math.sqrt(q_integer(row.k - 1, q) / q_integer(row.k, q)) / q ** 2
        assert row.ratio == pytest.approx(expected, rel=1e-9)
        assert row.ratio < 1 / q ** 2


def test_constant_carries_the_safety_factor():
    report = key_estimate_check([F], [F], [6, 7, 8], 0.5)
    assert report.constant == pytest.approx(1.01 * report.rows[0].ratio)


@pytest.mark.parametrize("annihilated", [[], [E], [F, E], [F, F]])
def test_annihilation_pattern_is_checked(annihilated):
    with pytest.raises(ValueError):
        key_estimate_check(annihilated, [F], range(5, 8), 0.5)


def test_k_range_must_cover_the_fixed_letters():
    with pytest.raises(ValueError):
        key_estimate_check([F], [F, F, F], range(2, 6), 0.5)
    with pytest.raises(ValueError):
        key_estimate_check([F], [F], [], 0.5)


def test_export():
    exported = key_estimate_check([F], [F], range(5, 7), 0.5).to_dict()
    assert [row["k"] for row in exported["rows"]] == [5, 6]
    assert exported["passed"] is True
