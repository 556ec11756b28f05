import math
from fractions import Fraction

import pytest

from qfock.combinatorics import (
    Permutation,
    all_permutations,
    gaussian_binomial,
    inversions,
    q_factorial,
    shuffle_representatives,
)


@pytest.mark.parametrize("mapping, expected", [
    ((0, 1, 2), 0),
    ((1, 0), 1),
    ((2, 1, 0), 3),
    ((1, 2, 0), 2),
])
def test_inversions(mapping, expected):
    assert inversions(Permutation(mapping)) == expected


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_compose_and_inverse():
    p = Permutation((1, 2, 0))
    assert p.compose(p.inverse()) == Permutation.identity(3)
    assert p.inverse().compose(p) == Permutation.identity(3)
    assert p.compose(p).mapping == (2, 0, 1)


def test_apply_reads_letters_through_the_permutation():
    assert Permutation((1, 0)).apply((0, 1)) == (1, 0)
    assert Permutation((2, 0, 1)).apply(("a", "b", "c")) == ("c", "a", "b")


def test_all_permutations_counts():
    assert sum(1 for _ in all_permutations(4)) == 24
    assert next(all_permutations(3)) == (Permutation.identity(3), 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_mahonian_sum_is_exact_q_factorial(n):
    q = Fraction(1, 2)
    total = sum(q ** inv for _, inv in all_permutations(n))
    assert total == q_factorial(n, q)


@pytest.mark.parametrize("n", range(1, 8))
def test_mahonian_sum_in_floating_point(n, q):
    total = sum(q ** inv for _, inv in all_permutations(n))
    assert total == pytest.approx(q_factorial(n, q), abs=1e-12)


def test_shuffle_representatives_small_cases():
    assert shuffle_representatives(2, 0) == [(Permutation.identity(2), 0)]
    assert sorted(inv for _, inv in shuffle_representatives(2, 1)) == [0, 1]


def test_shuffle_weights_give_gaussian_binomial():
    reps = shuffle_representatives(4, 2)
    assert len(reps) == 6
    total = sum(0.5 ** inv for _, inv in reps)
    assert total == pytest.approx(2.1875)
    assert total == pytest.approx(gaussian_binomial(4, 2, 0.5))


@pytest.mark.parametrize("n", range(0, 7))
def test_shuffle_representatives_pick_minimal_coset_elements(n):
    for m in range(n + 1):
        reps = shuffle_representatives(n, m)
        assert len(reps) == math.comb(n, m)
        assert math.factorial(n - m) * math.factorial(m) * len(reps) == math.factorial(n)
        cosets = set()
        for p, inv in reps:
            assert inv == inversions(p)
            # Increasing on both blocks
            assert list(p.mapping[:n - m]) == sorted(p.mapping[:n - m])
            assert list(p.mapping[n - m:]) == sorted(p.mapping[n - m:])
            cosets.add(frozenset(p.mapping[n - m:]))
        assert len(cosets) == len(reps)


def test_exact_gaussian_binomial():
    q = Fraction(1, 2)
    assert gaussian_binomial(4, 2, q) == Fraction(35, 16)


def test_shuffle_rejects_oversized_block():
    with pytest.raises(ValueError):
        shuffle_representatives(2, 3)
