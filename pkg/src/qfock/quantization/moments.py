import logging
from dataclasses import dataclass
from typing import Any, Dict, List

from ..combinatorics import check_q, crossings, pair_partitions
from ..fock import FockBasis, FockVector, q_inner
from ..operators import FockOperator, OperatorFactory
from ..utils.errors import GuardViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceValue:
    value: float

    def __float__(self) -> float:
        return self.value


def vacuum_trace(x: FockOperator) -> TraceValue:
    """tau(x) = <x Omega, Omega>_q"""
    if x.guard < 0:
        raise GuardViolation(f"{x.label} has no room for the vacuum (guard {x.guard})")
    omega = FockVector.vacuum(x.basis)
    return TraceValue(q_inner(x.apply(omega), omega))


def gaussian_moment(k: int, q: float, max_level: int) -> float:
    """tau(W(e)^k) by k applications of W(e) = l(e) + l*(e) to the vacuum"""
    check_q(q)
    if k < 0:
        raise ValueError(f"Moment order must be >= 0, got {k}")
    if max_level < k:
        raise ValueError(f"Truncation level {max_level} cannot hold {k} applications of W(e)")
    basis = FockBasis(1, max(max_level, 1), q)
    gaussian = OperatorFactory.get_operator("w", basis, 0)
    values = FockVector.vacuum(basis).array
    for _ in range(k):
        values = gaussian.apply_array(values)
    return float(values[0])


def gaussian_moment_oracle(k: int, q: float) -> float:
    """Sum over pair partitions of {1..k} of q^crossings; zero for odd k"""
    check_q(q)
    if k % 2:
        return 0.0
    return float(sum(q ** crossings(pairing) for pairing in pair_partitions(k)))


def moment_table(q: float, k_max: int, max_level: int) -> List[Dict[str, Any]]:
    """Rows (k, q, matrix, oracle, delta) for k = 0..k_max"""
    rows = []
    for k in range(k_max + 1):
        matrix = gaussian_moment(k, q, max_level)
        oracle = gaussian_moment_oracle(k, q)
        rows.append({"k": k, "q": q, "matrix": matrix, "oracle": oracle, "delta": abs(matrix - oracle)})
    logger.debug(f"Moment table q={q}: {len(rows)} rows")
    return rows
