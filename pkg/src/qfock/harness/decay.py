import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..combinatorics import QScalar, check_q
from ..fock import FockBasis, FockVector, Word, foreign_count, gram_matrix, q_inner, q_norm, q_norm_array
from ..operators import FockOperator, apply_e_symbol, w_left, w_right
from ..utils.errors import GuardViolation
from .jacobi import JacobiData, build_jacobi
from .rademacher import RademacherVector, rademacher_vector, symmetry_residuals

logger = logging.getLogger(__name__)

PAIRING_TOL = 1e-9
DECAY_RATIO = 0.2
DECAY_FLOOR = 1e-9
WEAK_NULL_LEVELS = 6
NORM_SLACK = 1e-3  # the symbol sup norm is sampled on a grid


def default_cut(z: Word, t: Word) -> int:
    """Cut level max(2 (len z + len t), 8)"""
    return max(2 * (len(z) + len(t)), 8)


def jacobi_size(max_level: int, steps: int) -> int:
    """Smallest truncation giving r_1 .. r_steps enough spectral atoms"""
    return max(max_level, 2 ** steps - 1, 1)


def working_basis(dim: int, q: float, z: Word, t: Word, size: int) -> FockBasis:
    """
    Restricted basis holding every vector of the experiment: words with at
    most as many non-e letters as z or t, up to len z + len t + 3 N_J.
    """
    foreign = max(foreign_count(z), foreign_count(t))
    return FockBasis(dim, len(z) + len(t) + 3 * size, q, max_foreign=foreign)


def commutator_range_vector(eta: RademacherVector, z: FockVector) -> Tuple[FockVector, FockVector, float]:
    """
    z_i = (W(eta) - W_r(eta)) W(eta) z and y_i = W_r(eta) W(eta) z.

    Returns (z_i, y_i, spectral tolerance) with the tolerance
    ||W(eta)^2 z - z||_q; by construction z_i - (z - y_i) is exactly
    W(eta)^2 z - z.
    """
    basis = z.basis
    top = z.max_level + 3 * eta.degree
    if top > basis.max_level:
        raise GuardViolation(
            f"Three applications of a degree {eta.degree} symbol to level {z.max_level} exceed {basis.max_level}"
        )
    forward = apply_e_symbol(basis, eta.coefficients, z.array, side="left")
    y = apply_e_symbol(basis, eta.coefficients, forward, side="right")
    squared = apply_e_symbol(basis, eta.coefficients, forward, side="left")
    spectral_tolerance = q_norm_array(basis, squared - z.array)
    z_i = FockVector.from_array(basis, squared - y)
    return z_i, FockVector.from_array(basis, y), spectral_tolerance


@dataclass
class DecayStep:
    index: int
    direct: float
    transposed: float
    pairing_residual: float
    a_part: float
    b_part: float
    spectral_tolerance: float
    symmetry_residual: float
    symbol_norm: float
    norm_ratio: float
    max_scaled_coefficient: float
    e_pairings: List[float]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "i": self.index,
            "I_direct": self.direct,
            "I_transposed": self.transposed,
            "pairing_residual": self.pairing_residual,
            "A": self.a_part,
            "B": self.b_part,
            "spectral_tolerance": self.spectral_tolerance,
            "symmetry_residual": self.symmetry_residual,
            "symbol_norm": self.symbol_norm,
            "norm_ratio": self.norm_ratio,
            "max_scaled_coefficient": self.max_scaled_coefficient,
            "e_pairings": self.e_pairings,
        }


@dataclass
class DecayReport:
    q: float
    dim: int
    max_level: int
    z: Word
    t: Word
    steps: int
    cut: int
    jacobi_size: int = 0
    working_level: int = 0
    b_bound: float = 0.0
    constant: float = 0.0
    records: List[DecayStep] = field(default_factory=list)

    @property
    def pairing_ok(self) -> bool:
        return all(r.pairing_residual <= PAIRING_TOL for r in self.records)

    @property
    def decay_ok(self) -> bool:
        if len(self.records) < 2:
            return True
        first, last = abs(self.records[0].direct), abs(self.records[-1].direct)
        return last <= DECAY_RATIO * first + DECAY_FLOOR

    @property
    def b_bound_ok(self) -> bool:
        return all(r.b_part <= self.b_bound * (1 + 1e-9) + 1e-12 for r in self.records)

    @property
    def norm_ok(self) -> bool:
        """||y_i||_q <= ||W(eta_i)||^2 ||z||_q at every step"""
        return all(r.norm_ratio <= r.symbol_norm ** 2 * (1 + NORM_SLACK) for r in self.records)

    @property
    def passed(self) -> bool:
        return self.pairing_ok and self.decay_ok and self.b_bound_ok and self.norm_ok

    def table(self) -> List[Tuple[int, float, float, float]]:
        """(i, I_i, A_i, B_i) rows"""
        return [(r.index, r.direct, r.a_part, r.b_part) for r in self.records]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "dim": self.dim,
            "max_level": self.max_level,
            "z": list(self.z),
            "t": list(self.t),
            "steps": self.steps,
            "cut": self.cut,
            "jacobi_size": self.jacobi_size,
            "working_level": self.working_level,
            "b_bound": self.b_bound,
            "constant": self.constant,
            "pairing_ok": self.pairing_ok,
            "decay_ok": self.decay_ok,
            "b_bound_ok": self.b_bound_ok,
            "norm_ok": self.norm_ok,
            "passed": self.passed,
            "steps_data": [r.to_dict() for r in self.records],
        }


def _pairing_table(basis: FockBasis, right: FockOperator, left: FockOperator, size: int) -> np.ndarray:
    """P[k, l] = <W_r(z) e^{(x)k}, W(t) e^{(x)l}>_q for k, l = 0..N_J"""
    powers = [FockVector.word(basis, (0,) * k).array for k in range(size + 1)]
    u = np.column_stack([right.apply_array(p) for p in powers])
    v = np.column_stack([left.apply_array(p) for p in powers])
    return u.T @ (gram_matrix(basis) @ v)


def _split_by_min_level(table: np.ndarray, cut: int) -> Tuple[float, float]:
    """A = sum_{kappa < cut} |S_kappa|, B = sum_{kappa >= cut} |S_kappa|, S_kappa summing min(k, l) = kappa"""
    size = table.shape[0]
    k, l = np.indices(table.shape)
    kappa = np.minimum(k, l)
    sums = np.bincount(kappa.ravel(), weights=table.ravel(), minlength=size)
    return float(np.abs(sums[:cut]).sum()), float(np.abs(sums[cut:]).sum())


def weak_decay_experiment(z: Sequence[int], t: Sequence[int], steps: int, q: float, dim: int,
                          max_level: int, cut: Optional[int] = None,
                          jacobi: Optional[JacobiData] = None) -> DecayReport:
    """
    I_i = <y_i, t>_q for i = 1..steps, computed directly and through the
    transposed pairing <W_r(z) eta_i, W(t) eta_i>_q, with the A_i/B_i split
    at the cut level and the i-independent bound on B_i.
    """
    check_q(q)
    z, t = tuple(z), tuple(t)
    if foreign_count(z) == 0:
        raise ValueError(f"z = {z} lies in E_e; it must contain a letter other than e")
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    cut = default_cut(z, t) if not cut else cut
    report = DecayReport(q=float(q), dim=dim, max_level=max_level, z=z, t=t, steps=steps, cut=cut)
    if steps == 0:
        return report

    size = jacobi_size(max_level, steps)
    jacobi = jacobi if jacobi is not None and jacobi.size >= size else build_jacobi(size, q)
    size = jacobi.size
    basis = working_basis(dim, q, z, t, size)
    report.jacobi_size = size
    report.working_level = basis.max_level
    logger.info(f"Decay experiment z={z} t={t} q={q}: N_J={size}, working level {basis.max_level}, {basis.size} words")

    z_vec = FockVector.word(basis, z)
    t_vec = FockVector.word(basis, t)
    z_norm = q_norm(z_vec)
    right_z, left_t = w_right(z_vec), w_left(t_vec)
    table = _pairing_table(basis, right_z, left_t, size)

    scalar = QScalar(float(q))
    inverse_roots = np.array([1 / math.sqrt(scalar.factorial(k)) for k in range(size + 1)])
    _, report.b_bound = _split_by_min_level(np.abs(table) * np.outer(inverse_roots, inverse_roots), cut)
    report.constant = report.b_bound / abs(q) ** cut if q != 0 else report.b_bound

    for i in range(1, steps + 1):
        eta = rademacher_vector(i, jacobi)
        a = np.array(eta.coefficients)
        _, y, tolerance = commutator_range_vector(eta, z_vec)
        direct = q_inner(y, t_vec)
        eta_vec = eta.vector(basis)
        transposed = q_inner(right_z.apply(eta_vec), left_t.apply(eta_vec))
        a_part, b_part = _split_by_min_level(table * np.outer(a, a), cut)
        step = DecayStep(
            index=i,
            direct=direct,
            transposed=transposed,
            pairing_residual=abs(direct - transposed),
            a_part=a_part,
            b_part=b_part,
            spectral_tolerance=tolerance,
            symmetry_residual=float(np.max(symmetry_residuals(eta, basis.max_level - 2 * eta.degree))),
            symbol_norm=eta.symbol_norm(),
            norm_ratio=q_norm(y) / z_norm,
            max_scaled_coefficient=float(np.max(np.abs(eta.orthonormal))),
            e_pairings=[eta.pairing(k) for k in range(min(WEAK_NULL_LEVELS, size) + 1)],
        )
        logger.debug(f"step {i}: I={direct:.3e} residual={step.pairing_residual:.1e} A={a_part:.3e} B={b_part:.3e}")
        report.records.append(step)

    if not report.passed:
        logger.error(
            f"Decay experiment z={z} t={t} failed: pairing_ok={report.pairing_ok}, "
            f"decay_ok={report.decay_ok}, b_bound_ok={report.b_bound_ok}, norm_ok={report.norm_ok}"
        )
    return report
