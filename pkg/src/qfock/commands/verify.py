import itertools
import logging
import math
from typing import Any, Dict, List, Tuple

import numpy as np

from ..combinatorics import all_permutations, c_q, q_factorial
from ..engine.config import RunConfig
from ..fock import (
    FockBasis,
    FockVector,
    embed_norm_check,
    factorization_residual,
    positivity_margin,
    q_inner,
    q_norm,
    rnk_matrix,
    pn_matrix,
)
from ..operators import (
    OperatorFactory,
    adjoint_check,
    commutator_residual,
    operator_norm,
    q_commutation_residual,
    reversal_conjugation_residual,
    reversal_s,
    symbol_adjoint_residual,
    symbol_swap_residual,
    w_left,
    wick_vacuum_residual,
)
from ..quantization import (
    ContractionMap,
    conditional_expectation_e,
    first_quantization,
    gaussian_moment,
    gaussian_moment_oracle,
    vacuum_trace,
)
from .check_result import CheckResult, run_check

logger = logging.getLogger(__name__)

POSITIVITY_BOUND = 1e12  # largest accepted max/min eigenvalue ratio
SYMMETRIZER_LEVELS = 6
POSITIVITY_LEVELS = 8
MAHONIAN_LEVELS = 7
WICK_LENGTH = 5
CONJUGATION_LENGTH = 3
TRACE_LENGTH = 3
MOMENT_ORDER = 10
EMBEDDING_TOL = 1e-9  # relative; the n = 0 case is an equality


def random_vector(basis: FockBasis, rng: np.random.Generator, top: int) -> FockVector:
    """Gaussian coefficients on the words of level <= top, normalized in the q-norm"""
    words = [w for w in basis.all_words() if len(w) <= top]
    vector = FockVector(basis, {w: rng.standard_normal() for w in words})
    return vector * (1.0 / q_norm(vector))


def words_up_to(dim: int, length: int, first: int = 1) -> List[Tuple[int, ...]]:
    return [w for n in range(first, length + 1) for w in itertools.product(range(dim), repeat=n)]


class VerifyCommand:
    def __init__(self, config: RunConfig):
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self._basis = None

    @property
    def basis(self) -> FockBasis:
        if self._basis is None:
            self._basis = FockBasis(self.config.dim, self.config.max_level, self.config.q)
        return self._basis

    def execute(self, parsed_query: Dict[str, Any]) -> Dict[str, Any]:
        """
        Run the identity suite in declared order
        """
        checks = [
            self._positivity,
            self._factorization,
            self._rnk_norm,
            self._mahonian,
            self._pure_e_diagonal,
            self._commutation,
            self._adjoints,
            self._annihilation_on_e_powers,
            self._wick_vacuum,
            self._reversal_conjugation,
            self._reversal_isometry,
            self._symbol_adjoint,
            self._symbol_swap,
            self._commutator,
            self._trace_symmetry,
            self._moments,
            self._first_quantization,
            self._conditional_expectation,
            self._embedding_bound,
            self._creation_norm,
        ]
        results: List[CheckResult] = []
        for check in checks:
            outcome = check()
            results.extend(outcome if isinstance(outcome, list) else [outcome])

        failed = [r.name for r in results if not r.passed]
        summary = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: residual {r.residual:.3e} (bound {r.bound:.3e})"
            for r in results
        ]
        return {
            "status": "failed" if failed else "success",
            "message": f"{len(results) - len(failed)}/{len(results)} checks passed",
            "summary": summary,
            "report": {
                "checks": [r.to_dict() for r in results],
                "passed": not failed,
            },
            "table": (
                ["name", "residual", "bound", "passed"],
                [[r.name, r.residual, r.bound, r.passed] for r in results],
            ),
        }

    def _levels(self, limit: int) -> List[int]:
        cap = self.config.dim_cap
        return [n for n in range(1, min(self.config.max_level, limit) + 1) if self.config.dim ** n <= cap]

    # Symmetrizers

    def _positivity(self) -> CheckResult:
        q, d = self.config.q, self.config.dim

        def check():
            margins = {}
            worst = 1.0
            for n in self._levels(POSITIVITY_LEVELS):
                low, high = positivity_margin(n, d, q)
                margins[str(n)] = {"min": low, "max": high}
                worst = max(worst, high / low if low > 0 else math.inf)
            return worst, {"levels": margins}

        return run_check("pn_positivity", {"q": q, "dim": d}, POSITIVITY_BOUND, check)

    def _factorization(self) -> CheckResult:
        q, d = self.config.q, self.config.dim

        def check():
            residuals = [
                factorization_residual(n, k, d, q)
                for n in self._levels(SYMMETRIZER_LEVELS) if n >= 2
                for k in range(1, n)
            ]
            return max(residuals, default=0.0), {"cases": len(residuals)}

        return run_check("rnk_factorization", {"q": q, "dim": d}, self.config.tol, check)

    def _rnk_norm(self) -> CheckResult:
        q, d = self.config.q, self.config.dim

        def check():
            norms = [
                float(np.linalg.norm(rnk_matrix(n, k, d, q).matrix, 2))
                for n in self._levels(SYMMETRIZER_LEVELS) if n >= 2
                for k in range(1, n)
            ]
            return max(norms, default=0.0), {}

        return run_check("rnk_norm", {"q": q, "dim": d}, c_q(q) * (1 + 1e-12), check)

    def _mahonian(self) -> CheckResult:
        q = self.config.q

        def check():
            residual = max(
                abs(sum(q ** inv for _, inv in all_permutations(n)) - q_factorial(n, q))
                for n in range(1, MAHONIAN_LEVELS + 1)
            )
            return residual, {}

        return run_check("mahonian_sum", {"q": q}, self.config.tol, check)

    def _pure_e_diagonal(self) -> CheckResult:
        q, d = self.config.q, self.config.dim

        def check():
            residual = max(
                (abs(pn_matrix(n, d, q).matrix[0, 0] - q_factorial(n, q)) / q_factorial(n, q)
                 for n in self._levels(POSITIVITY_LEVELS)),
                default=0.0,
            )
            return residual, {}

        return run_check("pn_pure_e_diagonal", {"q": q, "dim": d}, 1e-12, check)

    # Creation and annihilation

    def _commutation(self) -> List[CheckResult]:
        results = []
        for side in ("left", "right"):
            def check(side=side):
                letters = range(self.config.dim)
                residual = max(
                    q_commutation_residual(self.basis, e, f, side) for e in letters for f in letters
                )
                return residual, {}

            results.append(run_check(f"q_commutation_{side}", self._params(), self.config.tol, check))
        return results

    def _adjoints(self) -> List[CheckResult]:
        results = []
        for create, annihilate in (("l", "l*"), ("lr", "lr*")):
            def check(create=create, annihilate=annihilate):
                residual = max(
                    adjoint_check(
                        OperatorFactory.get_operator(create, self.basis, a),
                        OperatorFactory.get_operator(annihilate, self.basis, a),
                        self.config.max_level - 1,
                    )
                    for a in range(self.config.dim)
                )
                return residual, {}

            results.append(run_check(f"adjoint_{create}", self._params(), self.config.tol, check))
        return results

    def _annihilation_on_e_powers(self) -> CheckResult:
        def check():
            annihilation = OperatorFactory.get_operator("l*", self.basis, 0)
            scalar = self.basis.qscalar
            residual = 0.0
            for n in range(1, self.config.max_level + 1):
                image = annihilation.apply(FockVector.word(self.basis, (0,) * n))
                expected = FockVector.word(self.basis, (0,) * (n - 1), scalar.integer(n))
                residual = max(residual, float(np.max(np.abs((image - expected).array))))
            return residual, {}

        return run_check("annihilation_e_powers", self._params(), self.config.tol, check)

    # Wick products

    def _wick_vacuum(self) -> CheckResult:
        def check():
            length = min(WICK_LENGTH, self.config.max_level - 1)
            words = words_up_to(self.config.dim, length, first=0)
            residual = max(wick_vacuum_residual(FockVector.word(self.basis, w)) for w in words)
            return residual, {"words": len(words)}

        return run_check("wick_vacuum", self._params(), self.config.tol, check)

    def _reversal_conjugation(self) -> CheckResult:
        def check():
            length = min(CONJUGATION_LENGTH, self.config.max_level - 1)
            words = words_up_to(self.config.dim, length)
            residual = max(
                (reversal_conjugation_residual(FockVector.word(self.basis, w)) for w in words), default=0.0
            )
            return residual, {"words": len(words)}

        return run_check("reversal_conjugation", self._params(), self.config.tol, check)

    def _reversal_isometry(self) -> CheckResult:
        def check():
            residual = 0.0
            for _ in range(self.config.samples):
                x = random_vector(self.basis, self.rng, self.config.max_level)
                residual = max(residual, abs(q_norm(reversal_s(x)) - q_norm(x)))
            return residual, {}

        return run_check("reversal_isometry", self._params(), self.config.tol, check)

    def _symbol_adjoint(self) -> CheckResult:
        def check():
            top = self.config.max_level // 3
            residual = 0.0
            for _ in range(self.config.samples):
                xi = random_vector(self.basis, self.rng, top)
                x = random_vector(self.basis, self.rng, self.config.max_level - top)
                y = random_vector(self.basis, self.rng, self.config.max_level - top)
                residual = max(residual, symbol_adjoint_residual(xi, x, y))
            return residual, {}

        return run_check("symbol_adjoint", self._params(), self.config.tol, check)

    def _symbol_swap(self) -> CheckResult:
        def check():
            top = max(0, (self.config.max_level - 1) // 2)
            residual = 0.0
            for _ in range(self.config.samples):
                xi = random_vector(self.basis, self.rng, top)
                eta = random_vector(self.basis, self.rng, top)
                residual = max(residual, symbol_swap_residual(xi, eta))
            return residual, {}

        return run_check("symbol_swap", self._params(), self.config.tol, check)

    def _commutator(self) -> CheckResult:
        def check():
            top = max(0, self.config.max_level // 3)
            residual = 0.0
            for _ in range(self.config.samples):
                xi, eta, x = (random_vector(self.basis, self.rng, top) for _ in range(3))
                residual = max(residual, commutator_residual(xi, eta, x))
            return residual, {}

        return run_check("commutator", self._params(), self.config.tol, check)

    # Trace and quantization

    def _trace_symmetry(self) -> CheckResult:
        def check():
            words = words_up_to(min(self.config.dim, 2), TRACE_LENGTH)
            operators = {w: w_left(FockVector.word(self.basis, w)) for w in words if len(w) < self.config.max_level}
            residual = 0.0
            pairs = 0
            for a, b in itertools.product(operators, repeat=2):
                if len(a) + len(b) > self.config.max_level:
                    continue
                ab = vacuum_trace(operators[a] @ operators[b]).value
                ba = vacuum_trace(operators[b] @ operators[a]).value
                residual = max(residual, abs(ab - ba))
                pairs += 1
            return residual, {"pairs": pairs}

        return run_check("trace_symmetry", self._params(), self.config.tol, check)

    def _moments(self) -> CheckResult:
        q = self.config.q

        def check():
            deltas = {
                str(k): abs(gaussian_moment(k, q, MOMENT_ORDER) - gaussian_moment_oracle(k, q))
                for k in range(MOMENT_ORDER + 1)
            }
            return max(deltas.values()), {"deltas": deltas}

        return run_check("moment_oracle", {"q": q, "k_max": MOMENT_ORDER}, self.config.tol, check)

    def _first_quantization(self) -> List[CheckResult]:
        d = self.config.dim
        matrix = self.rng.standard_normal((d, d))
        t = ContractionMap(matrix / max(np.linalg.norm(matrix, 2), 1.0))

        def contraction():
            operator = first_quantization(self.basis, t)
            residual = 0.0
            for _ in range(self.config.samples):
                x = random_vector(self.basis, self.rng, self.config.max_level)
                residual = max(residual, q_norm(operator.apply(x)) - q_norm(x))
            return max(residual, 0.0), {}

        def compatibility():
            operator = first_quantization(self.basis, t)
            omega = FockVector.vacuum(self.basis)
            residual = 0.0
            for w in words_up_to(d, min(CONJUGATION_LENGTH, self.config.max_level - 1)):
                symbol = FockVector.word(self.basis, w)
                lhs = w_left(operator.apply(symbol)).apply(omega)
                rhs = operator.apply(w_left(symbol).apply(omega))
                residual = max(residual, float(np.max(np.abs((lhs - rhs).array))))
            return residual, {}

        return [
            run_check("first_quantization_contraction", self._params(), self.config.tol, contraction),
            run_check("second_quantization_symbol", self._params(), self.config.tol, compatibility),
        ]

    def _conditional_expectation(self) -> CheckResult:
        def check():
            residual = 0.0
            for _ in range(self.config.samples):
                xi = random_vector(self.basis, self.rng, self.config.max_level)
                projected = conditional_expectation_e(xi)
                residual = max(residual, float(np.max(np.abs((conditional_expectation_e(projected) - projected).array))))
                for k in range(self.config.max_level + 1):
                    power = FockVector.word(self.basis, (0,) * k)
                    residual = max(residual, abs(q_inner(xi - projected, power)))
            return residual, {}

        return run_check("conditional_expectation", self._params(), self.config.tol, check)

    def _embedding_bound(self) -> CheckResult:
        q, d = self.config.q, self.config.dim

        def check():
            worst = 0.0
            cases = 0
            for n in range(0, min(self.config.max_level, 3) + 1):
                m = self.config.max_level - n
                if d ** (n + m) > self.config.dim_cap:
                    continue
                letters = [1 + i % (d - 1) for i in range(n)] if d > 1 else [0] * n
                lhs, rhs = embed_norm_check(n, m, letters, q)
                worst = max(worst, lhs / rhs)
                cases += 1
            return worst, {"cases": cases}

        return run_check("embedding_norm_bound", {"q": q, "dim": d}, 1 + EMBEDDING_TOL, check)

    def _creation_norm(self) -> CheckResult:
        q, level = self.config.q, self.config.max_level

        def check():
            basis = FockBasis(1, level, q)
            left = operator_norm(OperatorFactory.get_operator("l", basis, 0),
                                 OperatorFactory.get_operator("l*", basis, 0), seed=self.config.seed)
            right = operator_norm(OperatorFactory.get_operator("lr", basis, 0),
                                  OperatorFactory.get_operator("lr*", basis, 0), seed=self.config.seed)
            return max(left, right), {"left": left, "right": right}

        bound = max(1.0, 1 / math.sqrt(1 - q)) + 1e-9
        return run_check("creation_norm", {"q": q, "max_level": level}, bound, check)

    def _params(self) -> Dict[str, Any]:
        return {"q": self.config.q, "dim": self.config.dim, "max_level": self.config.max_level}
