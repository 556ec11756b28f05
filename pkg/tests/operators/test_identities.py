import numpy as np
import pytest

from qfock.fock import FockBasis, FockVector
from qfock.operators import (
    commutator_residual,
    reversal_conjugation_residual,
    symbol_adjoint_residual,
    symbol_swap_residual,
    wick_vacuum_residual,
)

E, F = 0, 1


def _random_vector(basis, top, rng):
    values = np.where(basis.level_of <= top, rng.standard_normal(basis.size), 0.0)
    return FockVector.from_array(basis, values)


@pytest.fixture
def basis(q):
    return FockBasis(2, 6, q)


def test_wick_vacuum(basis, rng):
    assert wick_vacuum_residual(_random_vector(basis, 3, rng)) <= 1e-10


def test_symbols_swap(basis, rng):
    xi = _random_vector(basis, 2, rng)
    eta = _random_vector(basis, 2, rng)
    assert symbol_swap_residual(xi, eta) <= 1e-10


def test_left_and_right_symbols_commute(basis, rng):
    xi = _random_vector(basis, 2, rng)
    eta = _random_vector(basis, 2, rng)
    x = _random_vector(basis, 2, rng)
    assert commutator_residual(xi, eta, x) <= 1e-10


@pytest.mark.parametrize("q", [0.5, -0.5])
def test_commutant_on_seeded_triples(q):
    basis = FockBasis(2, 8, q)
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(100):
        xi, eta, x = (_random_vector(basis, 2, rng) for _ in range(3))
        worst = max(worst, commutator_residual(xi, eta, x))
    assert worst <= 1e-10


def test_gaussians_commute_across_sides():
    basis = FockBasis(3, 5, 0.7)
    xi = FockVector.word(basis, (F,))
    eta = FockVector.word(basis, (2, E))
    x = FockVector(basis, {(E, F): 1.0, (2,): -2.0, (): 0.5})
    assert commutator_residual(xi, eta, x) <= 1e-10


@pytest.mark.parametrize("word", [(E,), (E, F), (F, E, E), (F, F, E)])
def test_reversal_conjugation_agrees_with_right_wick_formula(q, word):
    basis = FockBasis(2, 5, q)
    assert reversal_conjugation_residual(FockVector.word(basis, word)) <= 1e-10


def test_reversal_conjugation_of_combination(basis, rng):
    assert reversal_conjugation_residual(_random_vector(basis, 3, rng)) <= 1e-10


def test_symbol_adjoint_is_reversed_symbol(basis, rng):
    xi = _random_vector(basis, 2, rng)
    x = _random_vector(basis, 4, rng)
    y = _random_vector(basis, 4, rng)
    assert symbol_adjoint_residual(xi, x, y) <= 1e-10


def test_restricted_basis_identities(rng):
    basis = FockBasis(3, 7, 0.5, max_foreign=2)
    xi = FockVector(basis, {(F,): 1.0, (E, E): -0.5})
    eta = FockVector(basis, {(E, 2): 2.0})
    assert wick_vacuum_residual(xi) <= 1e-10
    assert symbol_swap_residual(xi, eta) <= 1e-10
