from scipy import sparse

from ..fock import FockBasis, FockVector
from .fock_operator import FockOperator


def reversal_s(x: FockVector) -> FockVector:
    """S: reverses every word; an involutive q-isometry"""
    reversed_coefficients = {}
    for word, value in x.coefficients.items():
        reversed_coefficients[word[::-1]] = value
    return FockVector(x.basis, reversed_coefficients)


def reversal_operator(basis: FockBasis) -> FockOperator:
    """S as a permutation matrix on the basis"""
    cache = basis._operator_cache
    if ("s", -1) not in cache:
        rows = [basis.index_of(word[::-1]) for word in basis.all_words()]
        matrix = sparse.csr_matrix(
            ([1.0] * basis.size, (rows, list(range(basis.size)))), shape=(basis.size, basis.size)
        )
        cache[("s", -1)] = FockOperator.from_matrix(basis, matrix, label="S")
    return cache[("s", -1)]
