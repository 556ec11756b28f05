import math

import numpy as np
import pytest

from qfock.fock import FockBasis, FockVector
from qfock.operators import (
    OperatorFactory,
    WickTerm,
    apply_e_symbol,
    right_wick_expand,
    w_left,
    w_right,
    w_right_direct,
    wick_expand,
)
from qfock.utils.errors import GuardViolation

E, F = 0, 1


def _as_set(terms):
    return {(round(t.coefficient, 12), t.creations, t.annihilations) for t in terms}


def test_empty_word_is_identity():
    assert wick_expand((), 0.5) == [WickTerm(1.0, (), ())]


def test_single_letter():
    assert _as_set(wick_expand((E,), 0.5)) == {(1.0, (E,), ()), (1.0, (), (E,))}


def test_two_letter_word():
    assert _as_set(wick_expand((E, F), 0.5)) == {
        (1.0, (E, F), ()),
        (1.0, (E,), (F,)),
        (0.5, (F,), (E,)),
        (1.0, (), (E, F)),
    }


@pytest.mark.parametrize("n", range(0, 6))
def test_term_count(n):
    assert len(wick_expand((E,) * n, 0.3)) == 2 ** n
    assert len(right_wick_expand((E,) * n, 0.3)) == 2 ** n


def test_right_expansion_reads_the_word_backwards():
    terms = right_wick_expand((E, F), 0.5)
    assert all(t.side == "right" for t in terms)
    assert (1.0, (F, E), ()) in _as_set(terms)
    assert terms[0].to_dict()["side"] == "right"


@pytest.mark.parametrize("word", [(), (E,), (F, E), (E, E, F), (F, E, F, E)])
def test_symbols_rebuild_their_word_from_the_vacuum(q, word):
    basis = FockBasis(2, 5, q)
    xi = FockVector.word(basis, word)
    vacuum = FockVector.vacuum(basis)
    np.testing.assert_allclose(w_left(xi)(vacuum).array, xi.array, atol=1e-12)
    np.testing.assert_allclose(w_right(xi)(vacuum).array, xi.array, atol=1e-12)
    np.testing.assert_allclose(w_right_direct(xi)(vacuum).array, xi.array, atol=1e-12)


def test_vacuum_symbol_is_identity(rng):
    basis = FockBasis(2, 3, 0.5)
    values = rng.standard_normal(basis.size)
    np.testing.assert_allclose(w_left(FockVector.vacuum(basis)).apply_array(values), values)


def test_symbol_at_top_level_has_no_room():
    basis = FockBasis(2, 3, 0.5)
    with pytest.raises(GuardViolation):
        w_left(FockVector.word(basis, (E, E, E)))


def test_two_letter_symbol_from_gaussians(q):
    basis = FockBasis(2, 6, q)
    for e, f in [(E, E), (E, F), (F, E)]:
        product = OperatorFactory.get_operator("w", basis, e) @ OperatorFactory.get_operator("w", basis, f)
        symbol = w_left(FockVector.word(basis, (e, f)))
        columns = np.flatnonzero(basis.level_of <= symbol.guard)
        difference = (product.materialize() - symbol.materialize()).toarray()[:, columns]
        if e == f:
            difference[columns, np.arange(columns.size)] -= 1.0
        assert np.max(np.abs(difference)) <= 1e-12


@pytest.mark.parametrize("side", ["left", "right"])
def test_e_symbol_recursion_matches_wick_products(q, side, rng):
    basis = FockBasis(2, 7, q)
    coefficients = [0.3, -1.0, 0.0, 2.0]
    symbol = FockVector.e_power_series(basis, coefficients)
    operator = w_left(symbol) if side == "left" else w_right(symbol)
    values = np.where(basis.level_of <= operator.guard, rng.standard_normal(basis.size), 0.0)
    np.testing.assert_allclose(
        apply_e_symbol(basis, coefficients, values, side), operator.apply_array(values), atol=1e-10
    )


def test_e_symbol_guard_and_degenerate_input():
    basis = FockBasis(1, 4, 0.5)
    values = np.zeros(basis.size)
    values[basis.index_of((E, E))] = 1.0
    with pytest.raises(GuardViolation):
        apply_e_symbol(basis, [0.0, 0.0, 0.0, 1.0], values)
    assert not apply_e_symbol(basis, [0.0, 0.0], values).any()
    with pytest.raises(ValueError):
        apply_e_symbol(basis, [1.0], values, side="up")


def test_e_symbol_on_vacuum_gives_the_series():
    basis = FockBasis(1, 5, -0.5)
    vacuum = FockVector.vacuum(basis).array
    image = apply_e_symbol(basis, [1.0, 2.0, 3.0], vacuum)
    expected = FockVector.e_power_series(basis, [1.0, 2.0, 3.0]).array
    np.testing.assert_allclose(image, expected, atol=1e-12)
    assert math.isclose(image.sum(), 6.0)
