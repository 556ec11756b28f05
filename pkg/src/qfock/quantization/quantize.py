import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from ..fock import E_LETTER, FockBasis, FockVector
from ..operators import FockOperator
from ..utils.errors import BasisMismatch

logger = logging.getLogger(__name__)

CONTRACTION_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ContractionMap:
    """A real d x d matrix of operator norm at most 1"""
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.atleast_2d(np.asarray(self.matrix, dtype=float))
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Contraction must be a square matrix, got shape {matrix.shape}")
        norm = np.linalg.norm(matrix, 2)
        if norm > 1 + CONTRACTION_TOL:
            raise ValueError(f"Not a contraction: operator norm {norm}")
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def identity(cls, dim: int) -> "ContractionMap":
        return cls(np.eye(dim))

    @classmethod
    def projection(cls, dim: int, letter: int = E_LETTER) -> "ContractionMap":
        """Orthogonal projection onto the span of one basis letter"""
        matrix = np.zeros((dim, dim))
        matrix[letter, letter] = 1.0
        return cls(matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def first_quantization(basis: FockBasis, t: ContractionMap) -> FockOperator:
    """
    F_q(T): identity on C Omega and T (x) ... (x) T on level n.

    Needs a full basis; T^{(x)n} does not preserve the number of letters
    different from e.
    """
    if basis.is_restricted:
        raise ValueError("First quantization needs a full word basis")
    if t.dim != basis.dim:
        raise BasisMismatch(f"Contraction on dimension {t.dim} for a basis of dimension {basis.dim}")

    single = sparse.csr_matrix(t.matrix)
    block = sparse.csr_matrix(np.ones((1, 1)))
    blocks = [block]
    for _ in range(basis.max_level):
        block = sparse.kron(block, single, format="csr")
        blocks.append(block)
    matrix = sparse.block_diag(blocks, format="csr")
    return FockOperator.from_matrix(basis, matrix, label="F_q(T)")


def second_quantization_vector(t: ContractionMap, xi: FockVector) -> FockVector:
    """Symbol of Gamma_q(T)(W(xi)), which is F_q(T) xi"""
    return first_quantization(xi.basis, t).apply(xi)


def conditional_expectation_e(xi: FockVector) -> FockVector:
    """Keeps the words made only of e; the q-orthogonal projection onto E_e"""
    return FockVector(xi.basis, {
        word: value for word, value in xi.coefficients.items()
        if all(letter == E_LETTER for letter in word)
    })
