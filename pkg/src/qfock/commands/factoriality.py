import logging
from typing import Any, Dict

from ..engine.arg_parser import parse_word
from ..engine.config import RunConfig
from ..fock import E_LETTER
from ..harness import key_estimate_check, weak_decay_experiment

logger = logging.getLogger(__name__)

ESTIMATE_K_RANGE = range(5, 21)


class FactorialityCommand:
    def __init__(self, config: RunConfig):
        self.config = config

    def execute(self, parsed_query: Dict[str, Any]) -> Dict[str, Any]:
        """
        Decay experiment for z, t followed by the key estimate on the first
        non-e letter of z
        """
        config = self.config
        z = parse_word(parsed_query.get("z", "f"), config.dim)
        t = parse_word(parsed_query.get("t", "omega"), config.dim)

        decay = weak_decay_experiment(
            z, t, config.steps, config.q, config.dim, config.max_level, cut=config.cut or None,
        )
        report: Dict[str, Any] = {"decay": decay.to_dict()}
        summary = [
            f"i={r.index}: I={r.direct:.6e} residual={r.pairing_residual:.1e} A={r.a_part:.3e} B={r.b_part:.3e} "
            f"W(eta)^2-Id on E_e={r.symmetry_residual:.2e}"
            for r in decay.records
        ]
        passed = decay.passed
        rows = [[i, value, a, b] for i, value, a, b in decay.table()]

        estimate_rows = []
        if config.steps > 0:
            letter = next(letter for letter in z if letter != E_LETTER)
            estimate = key_estimate_check([letter], [letter], ESTIMATE_K_RANGE, config.q, config.dim)
            report["estimate"] = estimate.to_dict()
            summary.append(f"key estimate: C={estimate.constant:.6e}, {'ok' if estimate.passed else 'violated'}")
            passed = passed and estimate.passed
            estimate_rows = [[r.k, r.lhs, r.rhs] for r in estimate.rows]

        report["passed"] = passed
        return {
            "status": "success" if passed else "failed",
            "message": f"Decay experiment {'met' if passed else 'missed'} its criteria over {config.steps} steps",
            "summary": summary,
            "report": report,
            "table": (["i", "I", "A", "B"], rows),
            "extra_table": (["k", "lhs", "rhs"], estimate_rows),
        }
