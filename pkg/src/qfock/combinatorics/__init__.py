from .permutations import (
    Permutation,
    inversions,
    all_permutations,
    shuffle_representatives,
)
from .q_numbers import (
    QScalar,
    check_q,
    q_integer,
    q_factorial,
    gaussian_binomial,
    c_q,
)
from .pairings import pair_partitions, crossings, crossing_polynomial

__all__ = [
    'Permutation',
    'inversions',
    'all_permutations',
    'shuffle_representatives',
    'QScalar',
    'check_q',
    'q_integer',
    'q_factorial',
    'gaussian_binomial',
    'c_q',
    'pair_partitions',
    'crossings',
    'crossing_polynomial',
]
