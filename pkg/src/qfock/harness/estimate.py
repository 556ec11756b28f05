import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from ..combinatorics import QScalar, check_q
from ..fock import E_LETTER, FockBasis, FockVector, foreign_count, q_norm
from ..operators import OperatorFactory

logger = logging.getLogger(__name__)

SAFETY_FACTOR = 1.01
PROFILE_TOL = 1e-9


@dataclass
class EstimateRow:
    k: int
    lhs: float
    rhs: float
    ratio: float

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "lhs": self.lhs, "rhs": self.rhs, "ratio": self.ratio}


@dataclass
class EstimateReport:
    q: float
    annihilated: List[int]
    letters: List[int]
    constant: float
    rows: List[EstimateRow] = field(default_factory=list)

    @property
    def bound_ok(self) -> bool:
        return all(r.lhs <= r.rhs * (1 + 1e-12) for r in self.rows)

    @property
    def profile_ok(self) -> bool:
        """Running maximum over consecutive pairs never increases"""
        ratios = [r.ratio for r in self.rows]
        pairs = [max(a, b) for a, b in zip(ratios, ratios[1:])]
        return all(b <= a * (1 + PROFILE_TOL) for a, b in zip(pairs, pairs[1:]))

    @property
    def passed(self) -> bool:
        return self.bound_ok and self.profile_ok

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "annihilated": self.annihilated,
            "letters": self.letters,
            "constant": self.constant,
            "bound_ok": self.bound_ok,
            "profile_ok": self.profile_ok,
            "passed": self.passed,
            "rows": [r.to_dict() for r in self.rows],
        }


def _scale(k: int, scalar: QScalar) -> float:
    return abs(scalar.q) ** k * math.sqrt(scalar.factorial(k))


def key_estimate_check(annihilated: Sequence[int], letters: Sequence[int], k_range: Sequence[int],
                       q: float, dim: int = 2) -> EstimateReport:
    """
    lhs(k) = ||l_r*(i_v) ... l_r*(i_1) (j_1 ... j_r e^{(x)k-r})||_q against
    C |q|^k sqrt([k]_q!).

    i_1 .. i_{v-1} must be e and i_v not. The constant is fitted on the first
    k (and the next one for q < 0, where q-integers alternate around their
    limit) times a safety factor. Runs on the restricted basis of words with
    at most as many non-e letters as j_1 .. j_r.
    """
    check_q(q)
    annihilated, letters = list(annihilated), list(letters)
    ks = sorted(k_range)
    if not annihilated:
        raise ValueError("At least one annihilated letter is needed")
    if any(a != E_LETTER for a in annihilated[:-1]) or annihilated[-1] == E_LETTER:
        raise ValueError(f"Annihilated letters must be e, ..., e, then one letter other than e: {annihilated}")
    if not ks:
        raise ValueError("Empty k range")
    if ks[0] < len(letters):
        raise ValueError(f"k = {ks[0]} is shorter than the {len(letters)} fixed letters")

    basis = FockBasis(dim, ks[-1], q, max_foreign=foreign_count(tuple(letters)))
    scalar = basis.qscalar
    operators = [OperatorFactory.get_operator("lr*", basis, a) for a in annihilated]
    logger.info(f"Key estimate q={q} annihilating {annihilated} from {letters} e^k, k in [{ks[0]}, {ks[-1]}]")

    values = []
    for k in ks:
        array = FockVector.word(basis, tuple(letters) + (E_LETTER,) * (k - len(letters))).array
        for operator in operators:
            array = operator.apply_array(array)
        lhs = q_norm(FockVector.from_array(basis, array))
        scale = _scale(k, scalar)
        if lhs == 0.0:
            ratio = 0.0
        else:
            ratio = lhs / scale if scale > 0 else math.inf
        values.append((k, lhs, ratio))

    fitted = [ratio for _, _, ratio in values[:2 if q < 0 else 1]]
    constant = SAFETY_FACTOR * max(fitted)
    report = EstimateReport(q=float(q), annihilated=annihilated, letters=letters, constant=constant)
    for k, lhs, ratio in values:
        report.rows.append(EstimateRow(k=k, lhs=lhs, rhs=constant * _scale(k, scalar), ratio=ratio))

    if not report.passed:
        logger.error(f"Key estimate failed: bound_ok={report.bound_ok}, profile_ok={report.profile_ok}")
    return report
