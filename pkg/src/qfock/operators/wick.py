import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..combinatorics import shuffle_representatives
from ..fock import FockBasis, FockVector, Word, foreign_count
from ..utils.errors import BasisMismatch, GuardViolation
from .fock_operator import FockOperator
from .operator_factory import OperatorFactory
from .reversal import reversal_operator, reversal_s

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WickTerm:
    """q^{|sigma|} l(c_1)...l(c_j) l*(a_1)...l*(a_m), or the right-handed mirror"""
    coefficient: float
    creations: Tuple[int, ...]
    annihilations: Tuple[int, ...]
    side: str = "left"

    def factors(self, basis: FockBasis) -> Tuple:
        create, annihilate = ("l", "l*") if self.side == "left" else ("lr", "lr*")
        factors = [OperatorFactory.get_operator(create, basis, a).materialize() for a in self.creations]
        factors += [OperatorFactory.get_operator(annihilate, basis, a).materialize() for a in self.annihilations]
        return tuple(factors)

    def to_dict(self):
        return {
            "coefficient": self.coefficient,
            "creations": list(self.creations),
            "annihilations": list(self.annihilations),
            "side": self.side,
        }


def _expand(word: Word, q: float, side: str) -> List[WickTerm]:
    n = len(word)
    terms = []
    for m in range(n + 1):
        for p, inv in shuffle_representatives(n, m):
            letters = p.apply(word)
            terms.append(WickTerm(q ** inv, letters[:n - m], letters[n - m:], side))
    return terms


def wick_expand(word: Sequence[int], q: float) -> List[WickTerm]:
    """
    Wick formula for W(e_1 (x) ... (x) e_n).

    One term per m and per minimal shuffle representative sigma of
    S_{n-m} x S_m: creations of the letters sigma(1..n-m), then annihilations
    of the letters sigma(n-m+1..n). The empty word gives the identity.
    """
    return _expand(tuple(word), q, "left")


def right_wick_expand(word: Sequence[int], q: float) -> List[WickTerm]:
    """
    Mirror formula for W_r(e_1 (x) ... (x) e_n): the word is read from the
    right and every l, l* becomes l_r, l_r*.
    """
    return _expand(tuple(word)[::-1], q, "right")


def _operator_from_terms(vector: FockVector, side: str, label: str) -> FockOperator:
    basis = vector.basis
    if vector.max_level >= basis.max_level and vector.max_level > 0:
        raise GuardViolation(
            f"Symbol reaches level {vector.max_level}, no room left below truncation {basis.max_level}"
        )
    expand = wick_expand if side == "left" else right_wick_expand
    terms = []
    for word, value in vector.items():
        for term in expand(word, basis.q):
            terms.append((value * term.coefficient, term.factors(basis)))
    logger.debug(f"{label}: {len(terms)} Wick terms")
    return FockOperator(
        basis,
        terms,
        raise_level=max(vector.max_level, 0),
        raise_foreign=vector.max_foreign,
        label=label,
    )


def w_left(xi: FockVector) -> FockOperator:
    """W(xi), the linear extension of the Wick products over the words of xi"""
    return _operator_from_terms(xi, "left", f"W({_short(xi)})")


def w_right_direct(eta: FockVector) -> FockOperator:
    """W_r(eta) assembled from the right Wick formula"""
    return _operator_from_terms(eta, "right", f"Wr({_short(eta)})")


def w_right(eta: FockVector) -> FockOperator:
    """W_r(eta) = S W(S eta) S"""
    s = reversal_operator(eta.basis)
    operator = s @ w_left(reversal_s(eta)) @ s
    operator.label = f"Wr({_short(eta)})"
    return operator


def _short(vector: FockVector) -> str:
    words = [".".join(map(str, w)) or "Ω" for w, _ in vector.items()]
    return words[0] if len(words) == 1 else f"{len(words)} words"


def apply_e_symbol(basis: FockBasis, coefficients: Sequence[float], values: np.ndarray,
                   side: str = "left") -> np.ndarray:
    """
    W(sum_k a_k e^{(x)k}) applied to a coefficient array (W_r for side='right').

    Uses the q-Hermite recursion H_0 = Id, H_1 = W(e),
    H_{k+1} = W(e) H_k - [k]_q H_{k-1}, which follows from
    W(e) e^{(x)k} = e^{(x)k+1} + [k]_q e^{(x)k-1}. Degree k costs k sparse
    products instead of 2^k Wick terms.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    values = np.asarray(values, dtype=float)
    if values.shape != (basis.size,):
        raise BasisMismatch(f"Array of shape {values.shape} for a basis of size {basis.size}")

    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    if not coefficients:
        return np.zeros(basis.size)

    degree = len(coefficients) - 1
    support = basis.level_of[np.flatnonzero(values)]
    top = int(support.max()) if support.size else 0
    if top + degree > basis.max_level:
        raise GuardViolation(
            f"Symbol of degree {degree} on input up to level {top} exceeds truncation {basis.max_level}"
        )

    gaussian = OperatorFactory.get_operator("w" if side == "left" else "wr", basis, 0)
    previous = np.zeros(basis.size)
    current = values.copy()
    result = coefficients[0] * current
    for k in range(1, degree + 1):
        following = gaussian.apply_array(current) - basis.qscalar.integer(k - 1) * previous
        previous, current = current, following
        if coefficients[k] != 0:
            result += coefficients[k] * current
    return result
