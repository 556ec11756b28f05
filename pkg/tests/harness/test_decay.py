import json

import numpy as np
import pytest

from qfock.fock import FockBasis, FockVector, q_norm
from qfock.harness import (
    build_jacobi,
    commutator_range_vector,
    default_cut,
    jacobi_size,
    rademacher_vector,
    symmetry_residuals,
    weak_decay_experiment,
    working_basis,
)
from qfock.utils.errors import GuardViolation
from qfock.utils.report_encoder import dump_report

E, F = 0, 1


@pytest.fixture(scope="module")
def pair_with_f():
    return weak_decay_experiment((F,), (F,), steps=4, q=0.5, dim=2, max_level=8)


def test_cut_and_sizes():
    assert default_cut((F,), ()) == 8
    assert default_cut((F, E, F), (E, F)) == 10
    assert jacobi_size(12, 6) == 63
    assert jacobi_size(12, 2) == 12
    basis = working_basis(3, 0.5, (F, 2), (E,), 4)
    assert basis.max_level == 3 + 12
    assert basis.max_foreign == 2


def test_trivial_symbol_leaves_z_unchanged():
    basis = FockBasis(2, 6, 0.5)
    z = FockVector.word(basis, (F, E))
    eta = rademacher_vector(0, build_jacobi(1, 0.5))
    z_i, y_i, tolerance = commutator_range_vector(eta, z)
    assert q_norm(z_i) <= 1e-12
    np.testing.assert_allclose(y_i.array, z.array)
    assert tolerance == pytest.approx(0.0, abs=1e-12)


def test_range_vector_in_the_abelian_part():
    basis = FockBasis(1, 8, 0.5)
    z = FockVector.word(basis, (E, E))
    eta = rademacher_vector(1, build_jacobi(1, 0.5))
    z_i, _, _ = commutator_range_vector(eta, z)
    assert q_norm(z_i) <= 1e-12


def test_range_vector_differs_from_z_minus_y_by_the_tolerance():
    q = 0.5
    jacobi = build_jacobi(7, q)
    basis = working_basis(2, q, (F,), (), 7)
    z = FockVector.word(basis, (F,))
    for index in (1, 2, 3):
        eta = rademacher_vector(index, jacobi)
        z_i, y_i, tolerance = commutator_range_vector(eta, z)
        assert q_norm(z_i - (z - y_i)) == pytest.approx(tolerance, abs=1e-10)


def test_range_vector_guard():
    basis = FockBasis(2, 5, 0.5)
    eta = rademacher_vector(1, build_jacobi(3, 0.5))
    with pytest.raises(GuardViolation):
        commutator_range_vector(eta, FockVector.word(basis, (F,)))


def test_pairing_agrees_with_closed_form(pair_with_f):
    report = pair_with_f
    jacobi = build_jacobi(report.jacobi_size, 0.5)
    assert report.pairing_ok
    assert report.b_bound_ok
    for step in report.records:
        # <eta (x) f, f (x) eta>_q = sum_k c_k^2 q^k in the orthonormal coordinates
        c = np.array(rademacher_vector(step.index, jacobi).orthonormal)
        expected = float(np.sum(c ** 2 * 0.5 ** np.arange(c.size)))
        assert step.direct == pytest.approx(expected, abs=1e-9)
        assert step.transposed == pytest.approx(expected, abs=1e-9)
    assert report.norm_ok


def test_vacuum_target_gives_zero_pairings():
    report = weak_decay_experiment((F,), (), steps=3, q=0.5, dim=2, max_level=4)
    assert [step.direct for step in report.records] == [0.0, 0.0, 0.0]
    assert report.b_bound == 0.0
    assert report.passed


def test_parity_kills_mixed_target():
    report = weak_decay_experiment((F,), (E, F), steps=3, q=-0.5, dim=2, max_level=4)
    assert all(abs(step.direct) <= 1e-10 for step in report.records)
    assert report.pairing_ok


def test_q_zero_has_no_tail():
    report = weak_decay_experiment((F,), (F,), steps=2, q=0.0, dim=2, max_level=4)
    assert report.constant == report.b_bound
    assert all(step.b_part <= 1e-14 for step in report.records)


def test_empty_experiment():
    report = weak_decay_experiment((F,), (F,), steps=0, q=0.5, dim=2, max_level=12)
    assert report.records == []
    assert report.passed
    assert report.table() == []


def test_z_in_the_e_algebra_is_rejected():
    with pytest.raises(ValueError):
        weak_decay_experiment((E, E), (F,), steps=2, q=0.5, dim=2, max_level=4)


def test_report_serializes(pair_with_f):
    payload = json.loads(dump_report(pair_with_f.to_dict()))
    assert payload["z"] == [F]
    assert len(payload["steps_data"]) == 4
    assert payload["steps_data"][0]["i"] == 1
    assert len(pair_with_f.table()[0]) == 4


@pytest.fixture(scope="module")
def six_steps_against_f():
    return weak_decay_experiment((F,), (F,), steps=6, q=0.5, dim=2, max_level=12)


@pytest.fixture(scope="module", params=[(), (F,), (E, F)], ids=["omega", "f", "ef"])
def six_steps(request, six_steps_against_f):
    if request.param == (F,):
        return six_steps_against_f
    return weak_decay_experiment((F,), request.param, steps=6, q=0.5, dim=2, max_level=12)


def test_six_steps_pass_every_check(six_steps):
    assert six_steps.jacobi_size == 63
    assert six_steps.pairing_ok
    assert six_steps.decay_ok
    assert six_steps.b_bound_ok
    assert six_steps.norm_ok
    assert six_steps.passed


def test_weak_null_and_decay_against_f(six_steps_against_f):
    report = six_steps_against_f
    first, last = report.records[0], report.records[-1]
    assert abs(last.direct) <= 0.2 * abs(first.direct)
    assert last.a_part <= 0.2 * first.a_part
    assert abs(last.e_pairings[1]) <= 0.5 * abs(first.e_pairings[1])
    for step in report.records:
        assert all(abs(p) <= 1e-9 for p in step.e_pairings[0::2])


def test_tolerance_is_the_e_algebra_residual_on_omega():
    # f generates a copy of E_e under W(e), so W(eta)^2 f - f has the norm of W(eta)^2 Omega - Omega
    report = weak_decay_experiment((F,), (F,), steps=3, q=0.5, dim=2, max_level=8)
    jacobi = build_jacobi(report.jacobi_size, 0.5)
    for step in report.records:
        on_vacuum = symmetry_residuals(rademacher_vector(step.index, jacobi), 0)[0]
        assert on_vacuum == pytest.approx(step.spectral_tolerance, rel=1e-8)
        assert step.symmetry_residual >= step.spectral_tolerance * (1 - 1e-9)
        assert step.to_dict()["symmetry_residual"] == step.symmetry_residual
