import logging
import math
from typing import Optional

import numpy as np

from ..fock import FockBasis, FockVector, gram_matrix, q_inner, q_norm
from ..utils.errors import BasisMismatch, GuardViolation
from .fock_operator import FockOperator
from .operator_factory import OperatorFactory
from .reversal import reversal_operator, reversal_s
from .wick import w_left, w_right, w_right_direct

logger = logging.getLogger(__name__)

NORM_TOL = 1e-10
NORM_MAX_ITER = 10000


def _guarded_columns(basis: FockBasis, cap: int, foreign: Optional[int] = None) -> np.ndarray:
    mask = basis.level_of <= cap
    if foreign is not None:
        mask &= basis.foreign_of <= foreign
    return np.flatnonzero(mask)


def adjoint_check(a: FockOperator, b: FockOperator, cap: int) -> float:
    """
    max |<Ax, y>_q - <x, By>_q| over basis words x, y of level <= cap.

    In matrix form this compares A^T G with G B on the guarded block, G being
    the Gram matrix of the whole truncation.
    """
    if not a.basis.same_as(b.basis):
        raise BasisMismatch(f"{a.basis} vs {b.basis}")
    if cap > min(a.guard, b.guard):
        raise GuardViolation(f"Level cap {cap} exceeds the guards {a.guard}, {b.guard}")
    basis = a.basis
    foreign = None
    if basis.is_restricted:
        foreign = min(a.foreign_guard, b.foreign_guard)
    columns = _guarded_columns(basis, cap, foreign)
    gram = gram_matrix(basis)
    left = (a.materialize().T @ gram)[columns][:, columns]
    right = (gram @ b.materialize())[columns][:, columns]
    difference = (left - right).toarray() if hasattr(left, "toarray") else left - right
    return float(np.max(np.abs(difference), initial=0.0))


def q_commutation_residual(basis: FockBasis, e: int, f: int, side: str = "left") -> float:
    """
    max-norm of l*(f) l(e) - q l(e) l*(f) - (f, e) Id on every guarded basis
    word (l_r, l_r* for side='right').
    """
    create, annihilate = ("l", "l*") if side == "left" else ("lr", "lr*")
    creation = OperatorFactory.get_operator(create, basis, e)
    annihilation_f = OperatorFactory.get_operator(annihilate, basis, f)
    relation = annihilation_f @ creation - basis.q * (creation @ annihilation_f)
    columns = _guarded_columns(basis, relation.guard, relation.foreign_guard)
    matrix = relation.materialize()[:, columns].toarray()
    if e == f:
        matrix[columns, np.arange(columns.size)] -= 1.0
    return float(np.max(np.abs(matrix), initial=0.0))


def wick_vacuum_residual(xi: FockVector) -> float:
    """max |W(xi) Omega - xi|"""
    image = w_left(xi).apply(FockVector.vacuum(xi.basis))
    return float(np.max(np.abs(image.array - xi.array), initial=0.0))


def symbol_swap_residual(xi: FockVector, eta: FockVector) -> float:
    """max |W(xi) eta - W_r(eta) xi|"""
    left = w_left(xi).apply_array(eta.array)
    right = w_right(eta).apply_array(xi.array)
    return float(np.max(np.abs(left - right), initial=0.0))


def commutator_residual(xi: FockVector, eta: FockVector, x: FockVector) -> float:
    """||[W(xi), W_r(eta)] x||_q"""
    a, b = w_left(xi), w_right(eta)
    difference = a.apply(b.apply(x)) - b.apply(a.apply(x))
    return q_norm(difference)


def reversal_conjugation_residual(xi: FockVector) -> float:
    """
    max |S W(xi) S - W_r(S xi)| on guarded columns, the right-hand side taken
    from the right Wick formula.
    """
    s = reversal_operator(xi.basis)
    conjugated = s @ w_left(xi) @ s
    direct = w_right_direct(reversal_s(xi))
    columns = _guarded_columns(xi.basis, conjugated.guard, conjugated.foreign_guard)
    difference = (conjugated.materialize() - direct.materialize())[:, columns]
    return float(np.max(np.abs(difference.toarray()), initial=0.0))


def symbol_adjoint_residual(xi: FockVector, x: FockVector, y: FockVector) -> float:
    """|<W(xi) x, y>_q - <x, W(S xi) y>_q|"""
    return abs(q_inner(w_left(xi).apply(x), y) - q_inner(x, w_left(reversal_s(xi)).apply(y)))


def operator_norm(a: FockOperator, adjoint: FockOperator, tol: float = NORM_TOL,
                  max_iter: int = NORM_MAX_ITER, seed: int = 0) -> float:
    """
    ||A|| on the guarded levels, by power iteration of A* A in the q-inner
    product. The adjoint is supplied by the caller; convergence is relative.
    """
    basis = a.basis
    gram = gram_matrix(basis)
    mask = a.guard_mask()

    def norm(values: np.ndarray) -> float:
        return math.sqrt(max(float(values @ (gram @ values)), 0.0))

    rng = np.random.default_rng(seed)
    x = np.where(mask, rng.standard_normal(basis.size), 0.0)
    x /= norm(x)
    estimate = 0.0
    for iteration in range(1, max_iter + 1):
        image = a.apply_array(x)
        value = norm(image) ** 2
        if abs(value - estimate) <= tol * max(value, 1e-300):
            logger.debug(f"Norm of {a.label} converged after {iteration} iterations")
            return math.sqrt(value)
        estimate = value
        y = np.where(mask, adjoint.apply_array(image), 0.0)
        size = norm(y)
        if size == 0.0:
            return 0.0
        x = y / size
    logger.warning(f"Norm of {a.label} did not converge in {max_iter} iterations")
    return math.sqrt(estimate)
