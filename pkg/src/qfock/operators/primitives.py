from typing import List

from scipy import sparse

from ..fock import E_LETTER, FockBasis, remove_letter
from .fock_operator import FockOperator


def _creation_matrix(basis: FockBasis, letter: int, from_right: bool) -> sparse.csr_matrix:
    rows: List[int] = []
    cols: List[int] = []
    for col, word in enumerate(basis.all_words()):
        if len(word) >= basis.max_level:
            break
        grown = word + (letter,) if from_right else (letter,) + word
        # Restricted bases leave foreign overflow columns empty; the foreign guard forbids them
        if basis.contains(grown):
            rows.append(basis.index_of(grown))
            cols.append(col)
    return sparse.csr_matrix(([1.0] * len(rows), (rows, cols)), shape=(basis.size, basis.size))


def _annihilation_matrix(basis: FockBasis, letter: int, from_right: bool) -> sparse.csr_matrix:
    rows: List[int] = []
    cols: List[int] = []
    values: List[float] = []
    for col, word in enumerate(basis.all_words()):
        for reduced, weight in remove_letter(word, letter, basis.q, from_right=from_right):
            rows.append(basis.index_of(reduced))
            cols.append(col)
            values.append(weight)
    return sparse.csr_matrix((values, (rows, cols)), shape=(basis.size, basis.size))


def _foreign(letter: int) -> int:
    return 0 if letter == E_LETTER else 1


def creation_left(basis: FockBasis, letter: int) -> FockOperator:
    """l(e_a): prepends the letter"""
    basis.check_letter(letter)
    return FockOperator.from_matrix(
        basis, _creation_matrix(basis, letter, from_right=False),
        raise_level=1, raise_foreign=_foreign(letter), label=f"l({letter})",
    )


def creation_right(basis: FockBasis, letter: int) -> FockOperator:
    """l_r(e_a): appends the letter"""
    basis.check_letter(letter)
    return FockOperator.from_matrix(
        basis, _creation_matrix(basis, letter, from_right=True),
        raise_level=1, raise_foreign=_foreign(letter), label=f"lr({letter})",
    )


def annihilation_left(basis: FockBasis, letter: int) -> FockOperator:
    """l*(e_a): removes the letter at position i with weight q^{i-1}; kills Omega"""
    basis.check_letter(letter)
    return FockOperator.from_matrix(
        basis, _annihilation_matrix(basis, letter, from_right=False), label=f"l*({letter})",
    )


def annihilation_right(basis: FockBasis, letter: int) -> FockOperator:
    """l_r*(e_a): weight q^{n-i} for the letter at position i of a length n word"""
    basis.check_letter(letter)
    return FockOperator.from_matrix(
        basis, _annihilation_matrix(basis, letter, from_right=True), label=f"lr*({letter})",
    )


def gaussian_left(basis: FockBasis, letter: int) -> FockOperator:
    operator = creation_left(basis, letter) + annihilation_left(basis, letter)
    operator.label = f"W({letter})"
    return operator


def gaussian_right(basis: FockBasis, letter: int) -> FockOperator:
    operator = creation_right(basis, letter) + annihilation_right(basis, letter)
    operator.label = f"Wr({letter})"
    return operator
