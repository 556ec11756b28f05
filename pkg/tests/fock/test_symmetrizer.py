import json

import numpy as np
import pytest

from qfock.combinatorics import c_q, q_factorial
from qfock.fock import (
    apply_pn,
    factorization_residual,
    gram_min_eigenvalue,
    pn_matrix,
    positivity_margin,
    rnk_matrix,
)
from qfock.utils.errors import DimensionCapExceeded
from qfock.utils.report_encoder import ReportEncoder


def test_p1_is_identity():
    np.testing.assert_array_equal(pn_matrix(1, 3, 0.7).matrix, np.eye(3))


def test_p2_on_two_letters():
    q = 0.5
    expected = np.array([
        [1 + q, 0, 0, 0],
        [0, 1, q, 0],
        [0, q, 1, 0],
        [0, 0, 0, 1 + q],
    ])
    np.testing.assert_allclose(pn_matrix(2, 2, q).matrix, expected)


def test_single_letter_gives_q_factorial(q):
    assert pn_matrix(3, 1, q).matrix[0, 0] == pytest.approx(q_factorial(3, q))


def test_pn_is_symmetric_with_large_diagonal(q):
    matrix = pn_matrix(4, 2, q).matrix
    np.testing.assert_allclose(matrix, matrix.T, atol=1e-14)


def test_pn_diagonal_bounded_below_for_nonnegative_q():
    assert np.all(np.diag(pn_matrix(4, 3, 0.5).matrix) >= 1.0)


def test_r21_single_letter():
    assert rnk_matrix(2, 1, 1, 0.5).matrix[0, 0] == pytest.approx(1.5)


def test_r_is_identity_at_q_zero():
    np.testing.assert_array_equal(rnk_matrix(4, 2, 2, 0.0).matrix, np.eye(16))


def test_r_rejects_trivial_blocks():
    with pytest.raises(ValueError):
        rnk_matrix(3, 0, 2, 0.5)
    with pytest.raises(ValueError):
        rnk_matrix(3, 3, 2, 0.5)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("d", [1, 2])
def test_factorization(n, d, q):
    for k in range(1, n):
        assert factorization_residual(n, k, d, q) <= 1e-10


@pytest.mark.parametrize("n, k", [(3, 1), (4, 2), (5, 3)])
def test_factorization_three_letters(n, k):
    assert factorization_residual(n, k, 3, -0.5) <= 1e-10


@pytest.mark.parametrize("n, k", [(3, 1), (4, 2), (5, 2)])
def test_r_norm_bounded_by_c_q(n, k, q):
    norm = np.linalg.norm(rnk_matrix(n, k, 2, q).matrix, 2)
    assert norm <= c_q(q) * (1 + 1e-12)


def test_gram_min_eigenvalue_on_two_letters(q):
    assert gram_min_eigenvalue(1, 2, q) == pytest.approx(1.0)
    assert gram_min_eigenvalue(2, 2, q) == pytest.approx(min(1 - q, 1 + q))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_strict_positivity(n, q):
    low, high = positivity_margin(n, 2, q)
    assert low > 1e-12 * high


def test_near_one_still_positive():
    assert gram_min_eigenvalue(4, 2, 0.9) > 0


def test_single_letter_beyond_eight_levels():
    matrix = pn_matrix(9, 1, 0.3).matrix
    assert matrix[0, 0] == pytest.approx(q_factorial(9, 0.3), rel=1e-12)


@pytest.mark.parametrize("n", [6, 7, 8])
def test_pure_e_diagonal_keeps_relative_precision(n, q):
    # Near q = -1 the n! signed terms nearly cancel; the diagonal must still match [n]_q!
    diagonal = pn_matrix(n, 2, q).matrix[0, 0]
    assert abs(diagonal - q_factorial(n, q)) <= 1e-12 * q_factorial(n, q)


def test_apply_pn_matches_matrix(rng):
    values = rng.standard_normal(2 ** 4)
    np.testing.assert_allclose(apply_pn(values, 4, 2, -0.5), pn_matrix(4, 2, -0.5).matrix @ values, atol=1e-12)


@pytest.mark.parametrize("n, d", [(5, 2), (4, 3)])
def test_streamed_sum_agrees_with_recursion(n, d):
    # apply_pn sums over S_n directly, pn_matrix grows the block level by level
    identity = np.eye(d ** n)
    streamed = np.column_stack([apply_pn(identity[:, j], n, d, 0.5) for j in range(d ** n)])
    np.testing.assert_allclose(pn_matrix(n, d, 0.5).matrix, streamed, atol=1e-12)


def test_level_zero():
    symmetrizer = pn_matrix(0, 2, 0.5)
    np.testing.assert_array_equal(symmetrizer.matrix, [[1.0]])
    assert symmetrizer.words == [()]


def test_apply_pn_refuses_large_levels():
    with pytest.raises(DimensionCapExceeded):
        apply_pn(np.ones(1), 9, 1, 0.5)


def test_dimension_cap():
    with pytest.raises(DimensionCapExceeded):
        pn_matrix(5, 3, 0.5, cap=100)


def test_export_lists_words_and_rows():
    exported = json.loads(json.dumps(pn_matrix(2, 2, 0.5).to_dict(), cls=ReportEncoder))
    assert exported["words"] == ["0.0", "0.1", "1.0", "1.1"]
    assert exported["matrix"][1] == [0.0, 1.0, 0.5, 0.0]
    assert exported["kind"] == "P"
