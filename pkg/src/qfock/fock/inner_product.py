import logging
import math
from functools import reduce
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy import sparse

from ..combinatorics import c_q, check_q, q_factorial
from ..settings import MAX_ENUMERATED_LEVEL, dim_cap
from ..utils.errors import BasisMismatch, DimensionCapExceeded
from .basis import FockBasis
from .symmetrizer import apply_pn, insertion_gram, pn_matrix
from .vector import FockVector

logger = logging.getLogger(__name__)

Letter = Union[int, Sequence[float], np.ndarray]

UNIT_TOL = 1e-12


def level_gram(basis: FockBasis, n: int) -> np.ndarray:
    """
    Gram block <w', w>_q of level n, cached on the basis.

    Every level is grown from the one below with insertion_gram, the same
    recursion pn_matrix uses; full levels above the dense cap are refused.
    """
    cache = basis._gram_cache
    if n in cache:
        return cache[n]
    if not 0 <= n <= basis.max_level:
        raise ValueError(f"Level {n} outside 0..{basis.max_level}")

    cache.setdefault(0, np.ones((1, 1)))
    for level in range(1, n + 1):
        if level in cache:
            continue
        if not basis.is_restricted and basis.dim ** level > dim_cap():
            raise DimensionCapExceeded(f"Level {level} with d={basis.dim} exceeds the dense cap {dim_cap()}")
        prev_index = {w: i for i, w in enumerate(basis.words(level - 1))}
        logger.debug(f"Gram block of level {level} by insertion recursion ({len(basis.words(level))} words)")
        cache[level] = insertion_gram(basis.words(level), prev_index, cache[level - 1], basis.q)
    return cache[n]


def _check_arrays(basis: FockBasis, x: np.ndarray, y: np.ndarray) -> None:
    if x.shape != (basis.size,) or y.shape != (basis.size,):
        raise BasisMismatch(f"Arrays of shapes {x.shape}, {y.shape} for a basis of size {basis.size}")


def q_inner_arrays(basis: FockBasis, x: np.ndarray, y: np.ndarray) -> float:
    """Level by level sum of (x_n, P_n y_n) for coefficient arrays on `basis`"""
    _check_arrays(basis, x, y)
    total = 0.0
    for n in range(basis.max_level + 1):
        block = basis.level_slice(n)
        xs, ys = x[block], y[block]
        if not xs.any() or not ys.any():
            continue
        try:
            gram = level_gram(basis, n)
        except DimensionCapExceeded:
            # Levels above the dense cap but with few letters are streamed
            if basis.is_restricted or n > MAX_ENUMERATED_LEVEL:
                raise
            total += float(xs @ apply_pn(ys, n, basis.dim, basis.q))
            continue
        total += float(xs @ gram @ ys)
    return total


def q_inner(x: FockVector, y: FockVector) -> float:
    """q-inner product of two vectors on the same basis"""
    if not x.basis.same_as(y.basis):
        raise BasisMismatch(f"{x.basis} vs {y.basis}")
    return q_inner_arrays(x.basis, x.array, y.array)


def q_norm_array(basis: FockBasis, x: np.ndarray) -> float:
    return math.sqrt(max(q_inner_arrays(basis, x, x), 0.0))


def q_norm(x: FockVector) -> float:
    return q_norm_array(x.basis, x.array)


def gram_matrix(basis: FockBasis, max_level: Optional[int] = None) -> sparse.csr_matrix:
    """
    Block-diagonal Gram matrix of the levels up to `max_level`; rows and
    columns of higher levels are zero.
    """
    top = basis.max_level if max_level is None else max_level
    if not 0 <= top <= basis.max_level:
        raise ValueError(f"Level {top} outside 0..{basis.max_level}")
    blocks = [level_gram(basis, n) for n in range(top + 1)]
    used = sum(block.shape[0] for block in blocks)
    if used < basis.size:
        blocks.append(sparse.csr_matrix((basis.size - used, basis.size - used)))
    return sparse.block_diag(blocks, format="csr")


def _letter_vector(letter: Letter, dim: int) -> np.ndarray:
    if isinstance(letter, (int, np.integer)):
        vector = np.zeros(dim)
        vector[int(letter)] = 1.0
        return vector
    vector = np.zeros(dim)
    values = np.asarray(letter, dtype=float)
    vector[:len(values)] = values
    return vector


def embed_norm_check(n: int, m: int, letters: Sequence[Letter], q: float,
                     cap: Optional[int] = None) -> Tuple[float, float]:
    """
    Exact q-norm of e_1 (x) ... (x) e_n (x) e^{(x)m} next to the bound
    C_q^{n/2} sqrt([m]_q!).

    Letters are basis indices or coordinate vectors; index 0 is e. Both values
    are returned so the caller decides how to compare them.
    """
    check_q(q)
    if len(letters) != n:
        raise ValueError(f"Expected {n} letters, got {len(letters)}")
    dim = 1
    for letter in letters:
        if isinstance(letter, (int, np.integer)):
            dim = max(dim, int(letter) + 1)
        else:
            dim = max(dim, len(letter))

    vectors = [_letter_vector(letter, dim) for letter in letters]
    for vector in vectors:
        if abs(np.linalg.norm(vector) - 1.0) > UNIT_TOL:
            raise ValueError(f"Letter {vector} is not a unit vector")
    e = _letter_vector(0, dim)
    tensor = reduce(np.kron, vectors + [e] * m, np.ones(1))

    level = n + m
    cap = dim_cap() if cap is None else cap
    if dim ** level <= cap:
        squared = float(tensor @ pn_matrix(level, dim, q, cap).matrix @ tensor)
    else:
        squared = float(tensor @ apply_pn(tensor, level, dim, q))
    lhs = math.sqrt(squared)
    rhs = c_q(q) ** (n / 2) * math.sqrt(q_factorial(m, q))
    return lhs, rhs
