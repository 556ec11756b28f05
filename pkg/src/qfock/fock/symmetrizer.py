import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg, sparse

from ..combinatorics import all_permutations, check_q, shuffle_representatives
from ..settings import MAX_ENUMERATED_LEVEL, dim_cap
from ..utils.errors import DimensionCapExceeded
from .basis import Word, remove_letter

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Symmetrizer:
    """Matrix of P_n or R_{n,k} on the lexicographic word basis of level n"""
    kind: str
    n: int
    d: int
    q: float
    matrix: np.ndarray
    k: Optional[int] = None

    @property
    def words(self) -> List[Word]:
        return list(itertools.product(range(self.d), repeat=self.n))

    def eigenvalues(self) -> np.ndarray:
        return linalg.eigvalsh(self.matrix)

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "kind": self.kind,
            "n": self.n,
            "d": self.d,
            "q": self.q,
        }
        if self.k is not None:
            result["k"] = self.k
        result["words"] = [".".join(map(str, w)) for w in self.words]
        result["matrix"] = self.matrix.tolist()
        return result


def _check_level(n: int, d: int, cap: Optional[int]) -> int:
    if n < 0:
        raise ValueError(f"Level must be >= 0, got {n}")
    if d < 1:
        raise ValueError(f"Letter dimension must be >= 1, got {d}")
    cap = dim_cap() if cap is None else cap
    size = d ** n
    if size > cap:
        raise DimensionCapExceeded(f"Level {n} with d={d} has dimension {size}, cap is {cap}")
    return size


def _level_digits(n: int, d: int) -> Tuple[np.ndarray, np.ndarray]:
    """Letters of every level-n word as rows, and the positional weights of the lexicographic index"""
    digits = np.array(list(itertools.product(range(d), repeat=n)), dtype=np.int64).reshape(d ** n, n)
    powers = d ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return digits, powers


def insertion_gram(words: Sequence[Word], prev_index: Mapping[Word, int], prev_gram: np.ndarray, q: float) -> np.ndarray:
    """
    Gram block of one level from the block below it.

    Writing y = sum_a y_a (x) a, the q-inner product satisfies
    <x, y>_n = sum_a <l_r*(a) x, y_a>_{n-1}, so the columns of words ending
    with a are A_a G_{n-1}[:, prefix], A_a being right annihilation by a
    written on rows. This is P_n = R_{n,1}(P_{n-1} (x) Id) in matrix form and
    works on any word set closed under deleting letters.
    """
    size = len(words)
    gram = np.zeros((size, size))
    letters = sorted({w[-1] for w in words})
    for letter in letters:
        rows, cols, values = [], [], []
        for row, word in enumerate(words):
            for reduced, weight in remove_letter(word, letter, q, from_right=True):
                rows.append(row)
                cols.append(prev_index[reduced])
                values.append(weight)
        annihilation = sparse.csr_matrix((values, (rows, cols)), shape=(size, len(prev_index)))
        targets = [i for i, w in enumerate(words) if w[-1] == letter]
        prefixes = [prev_index[words[i][:-1]] for i in targets]
        gram[:, targets] = annihilation @ prev_gram[:, prefixes]
    # Exact arithmetic gives a symmetric block; remove the rounding skew
    return (gram + gram.T) / 2


def _recursive_pn(n: int, d: int, q: float) -> np.ndarray:
    gram = np.ones((1, 1))
    prev_index = {(): 0}
    for level in range(1, n + 1):
        words = list(itertools.product(range(d), repeat=level))
        gram = insertion_gram(words, prev_index, gram, q)
        prev_index = {w: i for i, w in enumerate(words)}
    return gram


def pn_matrix(n: int, d: int, q: float, cap: Optional[int] = None) -> Symmetrizer:
    """
    P_n = sum over S_n of q^{|sigma|} phi(sigma) on level n.

    Entry (w', w) collects q^{|sigma|} over the sigma moving w to w'. The block
    is grown from level 0 with insertion_gram: every step multiplies by closed
    form q-integers, so the entries keep full relative precision near q = -1
    where the n! signed terms of the defining sum cancel. apply_pn streams the
    defining sum and serves as the independent check.
    """
    check_q(q)
    _check_level(n, d, cap)
    logger.debug(f"P_{n} for d={d}, q={q}: insertion recursion over {n} levels")
    matrix = _recursive_pn(n, d, q)
    return Symmetrizer(kind="P", n=n, d=d, q=float(q), matrix=matrix)


def rnk_matrix(n: int, k: int, d: int, q: float, cap: Optional[int] = None) -> Symmetrizer:
    """R_{n,k}: shuffle representatives of S_{n-k} x S_k weighted by q^{|sigma|}, acting by sigma^{-1}"""
    check_q(q)
    if not 1 <= k <= n - 1:
        raise ValueError(f"R_(n,k) needs 1 <= k <= n-1, got n={n}, k={k}")
    size = _check_level(n, d, cap)
    digits, powers = _level_digits(n, d)
    columns = np.arange(size)
    matrix = np.zeros((size, size))
    for p, inv in shuffle_representatives(n, k):
        targets = digits[:, list(p.inverse().mapping)] @ powers
        matrix[targets, columns] += q ** inv
    return Symmetrizer(kind="R", n=n, d=d, q=float(q), matrix=matrix, k=k)


def factorization_residual(n: int, k: int, d: int, q: float, cap: Optional[int] = None) -> float:
    """max-norm of P_n - R_{n,k}(P_{n-k} (x) P_k)"""
    product = rnk_matrix(n, k, d, q, cap).matrix @ np.kron(
        pn_matrix(n - k, d, q, cap).matrix, pn_matrix(k, d, q, cap).matrix
    )
    return float(np.max(np.abs(pn_matrix(n, d, q, cap).matrix - product)))


def apply_pn(values: np.ndarray, n: int, d: int, q: float) -> np.ndarray:
    """
    P_n applied to a level-n coefficient array without forming the matrix.

    Streams over the n! permutations, so it is only offered for n <= 8; the
    level itself may exceed the dense cap.
    """
    check_q(q)
    if n > MAX_ENUMERATED_LEVEL:
        raise DimensionCapExceeded(f"Streaming P_{n} would enumerate {n}! permutations")
    values = np.asarray(values, dtype=float)
    if values.shape != (d ** n,):
        raise ValueError(f"Expected {d ** n} coefficients at level {n}, got {values.shape}")
    if n == 0:
        return values.copy()
    logger.debug(f"Streaming P_{n} over S_{n} for a level of dimension {d ** n}")
    digits, powers = _level_digits(n, d)
    result = np.zeros_like(values)
    for p, inv in all_permutations(n):
        targets = digits[:, list(p.mapping)] @ powers
        result[targets] += (q ** inv) * values
    return result


def gram_min_eigenvalue(n: int, d: int, q: float, cap: Optional[int] = None) -> float:
    """Smallest eigenvalue of P_n"""
    return float(pn_matrix(n, d, q, cap).eigenvalues()[0])


def positivity_margin(n: int, d: int, q: float, cap: Optional[int] = None) -> Tuple[float, float]:
    """(min eigenvalue, max eigenvalue) of P_n; strict positivity means min > 1e-12 * max"""
    eigenvalues = pn_matrix(n, d, q, cap).eigenvalues()
    return float(eigenvalues[0]), float(eigenvalues[-1])
