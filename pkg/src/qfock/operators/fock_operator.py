import logging
from functools import reduce
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from ..fock import FockBasis, FockVector
from ..utils.errors import BasisMismatch, GuardViolation

logger = logging.getLogger(__name__)

# coefficient, factors in operator order (the last factor acts first)
Term = Tuple[float, Tuple[sparse.csr_matrix, ...]]

MATERIALIZE_AFTER = 2


class FockOperator:
    """
    Linear map on a truncated Fock space, kept as a sum of products of sparse
    factors.

    `raise_level` is the creation depth: inputs must live on levels
    <= max_level - raise_level, otherwise mass would leave the truncation.
    On a restricted basis `raise_foreign` plays the same role for the number
    of letters other than e. Violations raise GuardViolation; nothing is
    dropped silently.
    """

    def __init__(self, basis: FockBasis, terms: Sequence[Term], raise_level: int = 0,
                 raise_foreign: int = 0, label: str = ""):
        self.basis = basis
        self.terms: Tuple[Term, ...] = tuple(terms)
        self.raise_level = raise_level
        self.raise_foreign = raise_foreign
        self.label = label
        self._matrix: Optional[sparse.csr_matrix] = None
        self._uses = 0

    @classmethod
    def identity(cls, basis: FockBasis, label: str = "Id") -> "FockOperator":
        return cls(basis, [(1.0, ())], label=label)

    @classmethod
    def zero(cls, basis: FockBasis, label: str = "0") -> "FockOperator":
        return cls(basis, [], label=label)

    @classmethod
    def from_matrix(cls, basis: FockBasis, matrix, raise_level: int = 0, raise_foreign: int = 0,
                    label: str = "") -> "FockOperator":
        matrix = sparse.csr_matrix(matrix)
        if matrix.shape != (basis.size, basis.size):
            raise BasisMismatch(f"Matrix of shape {matrix.shape} for a basis of size {basis.size}")
        return cls(basis, [(1.0, (matrix,))], raise_level, raise_foreign, label)

    @property
    def guard(self) -> int:
        """Highest input level on which the operator is exact"""
        return self.basis.max_level - self.raise_level

    @property
    def foreign_guard(self) -> Optional[int]:
        if not self.basis.is_restricted:
            return None
        return self.basis.max_foreign - self.raise_foreign

    def guard_mask(self) -> np.ndarray:
        """Basis positions an input may occupy"""
        mask = self.basis.level_of <= self.guard
        if self.foreign_guard is not None:
            mask &= self.basis.foreign_of <= self.foreign_guard
        return mask

    def check_input(self, values: np.ndarray) -> None:
        outside = np.flatnonzero(values[~self.guard_mask()])
        if outside.size:
            raise GuardViolation(
                f"{self.label or 'operator'} is exact up to level {self.guard}"
                + (f" and {self.foreign_guard} foreign letters" if self.foreign_guard is not None else "")
                + f"; input has {outside.size} coefficients outside"
            )

    def _check_basis(self, other: "FockOperator") -> None:
        if not self.basis.same_as(other.basis):
            raise BasisMismatch(f"{self.basis} vs {other.basis}")

    def materialize(self) -> sparse.csr_matrix:
        """Sparse matrix of the whole operator, built once"""
        if self._matrix is None:
            size = self.basis.size
            identity = sparse.identity(size, format="csr")
            matrix = sparse.csr_matrix((size, size))
            for coefficient, factors in self.terms:
                product = reduce(lambda a, b: a @ b, factors, identity)
                matrix = matrix + coefficient * product
            self._matrix = sparse.csr_matrix(matrix)
            logger.debug(f"Materialized {self.label or 'operator'}: {len(self.terms)} terms, nnz={self._matrix.nnz}")
        return self._matrix

    def apply_array(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values, dtype=float)
        if values.shape != (self.basis.size,):
            raise BasisMismatch(f"Array of shape {values.shape} for a basis of size {self.basis.size}")
        self.check_input(values)

        self._uses += 1
        if self._matrix is not None or self._uses >= MATERIALIZE_AFTER:
            return self.materialize() @ values

        result = np.zeros(self.basis.size)
        for coefficient, factors in self.terms:
            partial = values
            for factor in reversed(factors):
                partial = factor @ partial
            result += coefficient * partial
        return result

    def apply(self, vector: FockVector) -> FockVector:
        if not self.basis.same_as(vector.basis):
            raise BasisMismatch(f"{self.basis} vs {vector.basis}")
        return FockVector.from_array(self.basis, self.apply_array(vector.array))

    def __call__(self, vector: FockVector) -> FockVector:
        return self.apply(vector)

    def __add__(self, other: "FockOperator") -> "FockOperator":
        self._check_basis(other)
        return FockOperator(
            self.basis,
            self.terms + other.terms,
            max(self.raise_level, other.raise_level),
            max(self.raise_foreign, other.raise_foreign),
            f"({self.label} + {other.label})",
        )

    def scale(self, scalar: float) -> "FockOperator":
        return FockOperator(
            self.basis,
            [(scalar * c, factors) for c, factors in self.terms],
            self.raise_level,
            self.raise_foreign,
            f"{scalar:g}*{self.label}",
        )

    def __rmul__(self, scalar: float) -> "FockOperator":
        return self.scale(scalar)

    def __neg__(self) -> "FockOperator":
        return self.scale(-1.0)

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        return self + (-other)

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        """Composition; creation depths add up"""
        self._check_basis(other)
        terms = [
            (a * b, left + right)
            for a, left in self.terms
            for b, right in other.terms
        ]
        return FockOperator(
            self.basis,
            terms,
            self.raise_level + other.raise_level,
            self.raise_foreign + other.raise_foreign,
            f"{self.label} {other.label}",
        )

    def __repr__(self) -> str:
        return f"FockOperator({self.label!r}, terms={len(self.terms)}, guard={self.guard})"
