from dataclasses import dataclass
from typing import Any, Dict

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ..combinatorics import QScalar


@dataclass(frozen=True, eq=False)
class JacobiData:
    """
    W(e) on E_e in the q-orthonormal basis e^{(x)n} / sqrt([n]_q!), n = 0..N,
    with its spectral data. Eigenvalues are ascending; weights are the
    squared first components of the eigenvectors (the vacuum distribution).
    """
    q: float
    size: int
    off_diagonal: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    weights: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.off_diagonal, 1) + np.diag(self.off_diagonal, -1)

    @property
    def atoms(self) -> int:
        return self.size + 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "size": self.size,
            "eigenvalues": self.eigenvalues.tolist(),
            "weights": self.weights.tolist(),
        }


def build_jacobi(size: int, q: float) -> JacobiData:
    """Tridiagonal (N+1) x (N+1) matrix with zero diagonal and off-diagonals sqrt([n]_q)"""
    if size < 1:
        raise ValueError(f"Jacobi size must be >= 1, got {size}")
    scalar = QScalar(float(q))
    off_diagonal = np.sqrt([scalar.integer(n) for n in range(1, size + 1)])
    eigenvalues, eigenvectors = eigh_tridiagonal(np.zeros(size + 1), off_diagonal)
    weights = eigenvectors[0, :] ** 2
    return JacobiData(
        q=float(q),
        size=size,
        off_diagonal=off_diagonal,
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
        weights=weights,
    )
