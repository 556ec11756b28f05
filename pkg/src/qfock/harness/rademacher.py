import math
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from ..combinatorics import QScalar
from ..fock import FockBasis, FockVector
from ..utils.errors import ResolutionExhausted
from .jacobi import JacobiData, build_jacobi

SUP_GRID = 8001  # points of the spectrum interval used for the symbol sup norm


@dataclass(frozen=True)
class RademacherVector:
    """
    eta_i = r_i(W(e)) Omega for a +-1 valued function r_i of the spectrum.

    `orthonormal` holds the coefficients in the basis e^{(x)k}/sqrt([k]_q!),
    `coefficients` the a_k in the plain e^{(x)k} basis.
    """
    index: int
    q: float
    signs: Tuple[int, ...]
    orthonormal: Tuple[float, ...]
    coefficients: Tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def vector(self, basis: FockBasis) -> FockVector:
        return FockVector.e_power_series(basis, self.coefficients)

    def pairing(self, k: int) -> float:
        """<eta_i, e^{(x)k}>_q = a_k [k]_q!"""
        if k > self.degree:
            return 0.0
        return self.coefficients[k] * QScalar(self.q).factorial(k)

    def symbol(self, points: Sequence[float]) -> np.ndarray:
        """
        p(x) = sum_k c_k P_k(x) with W(eta) = p(W(e)); P_k are the orthonormal
        polynomials of W(e), sqrt([k+1]_q) P_{k+1} = x P_k - sqrt([k]_q) P_{k-1}.
        """
        x = np.asarray(points, dtype=float)
        scalar = QScalar(self.q)
        previous, current = np.zeros_like(x), np.ones_like(x)
        values = self.orthonormal[0] * current
        for k in range(1, self.degree + 1):
            following = (x * current - math.sqrt(scalar.integer(k - 1)) * previous) / math.sqrt(scalar.integer(k))
            previous, current = current, following
            values = values + self.orthonormal[k] * current
        return values

    def symbol_norm(self) -> float:
        """||W(eta)|| = max |p| over the spectrum [-2/sqrt(1-q), 2/sqrt(1-q)] of W(e), sampled on a grid"""
        edge = 2 / math.sqrt(1 - self.q)
        return float(np.max(np.abs(self.symbol(np.linspace(-edge, edge, SUP_GRID)))))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "signs": list(self.signs),
            "coefficients": list(self.coefficients),
        }


def spectral_quantiles(jacobi: JacobiData) -> np.ndarray:
    """Midpoint quantile of each eigenvalue, measuring the vacuum mass from the top of the spectrum"""
    weights = jacobi.weights
    above = np.concatenate([np.cumsum(weights[::-1])[::-1][1:], [0.0]])
    return above + weights / 2


def rademacher_signs(index: int, jacobi: JacobiData) -> np.ndarray:
    if index < 0:
        raise ValueError(f"Rademacher index must be >= 0, got {index}")
    if 2 ** index > jacobi.atoms:
        raise ResolutionExhausted(
            f"r_{index} needs {2 ** index} spectral atoms, the Jacobi matrix has {jacobi.atoms}"
        )
    values = np.sin((2 ** index) * math.pi * spectral_quantiles(jacobi))
    return np.where(values < 0, -1, 1)


def rademacher_vector(index: int, jacobi: JacobiData) -> RademacherVector:
    """
    Applies r_index(J) to the vacuum coordinate, normalizes in the q-norm and
    converts to coefficients of e^{(x)k}.
    """
    signs = rademacher_signs(index, jacobi)
    vectors = jacobi.eigenvectors
    orthonormal = vectors @ (signs * vectors[0, :])
    orthonormal /= np.linalg.norm(orthonormal)

    scalar = QScalar(jacobi.q)
    coefficients = [c / math.sqrt(scalar.factorial(k)) for k, c in enumerate(orthonormal)]
    return RademacherVector(
        index=index,
        q=jacobi.q,
        signs=tuple(int(s) for s in signs),
        orthonormal=tuple(float(c) for c in orthonormal),
        coefficients=tuple(float(a) for a in coefficients),
    )


def symmetry_residuals(eta: RademacherVector, depth: int) -> np.ndarray:
    """
    ||W(eta)^2 x - x||_q for x = e^{(x)m} / sqrt([m]_q!), m = 0..depth.

    W(eta) is p(W(e)) and leaves E_e invariant, so the computation runs on a
    Jacobi matrix deep enough (depth + 2 deg) that the top level is never
    reached. The residual does not vanish: p is a polynomial that equals +-1
    only on the atoms of the truncation it was built from.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    jacobi = build_jacobi(max(depth + 2 * eta.degree, 1), eta.q)
    matrix = jacobi.matrix
    size = matrix.shape[0]
    scalar = QScalar(eta.q)
    previous, current = np.zeros((size, size)), np.eye(size)
    symbol = eta.orthonormal[0] * current
    for k in range(1, eta.degree + 1):
        following = (matrix @ current - math.sqrt(scalar.integer(k - 1)) * previous) / math.sqrt(scalar.integer(k))
        previous, current = current, following
        symbol += eta.orthonormal[k] * current
    square = symbol @ symbol[:, :depth + 1]
    return np.linalg.norm(square - np.eye(size)[:, :depth + 1], axis=0)
