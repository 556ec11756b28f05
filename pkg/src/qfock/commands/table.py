from typing import Any, Dict

from ..engine.config import RunConfig
from ..fock import pn_matrix
from ..harness import key_estimate_check
from ..quantization import moment_table

MOMENT_ORDER = 10


class TableCommand:
    def __init__(self, config: RunConfig):
        self.config = config

    def execute(self, parsed_query: Dict[str, Any]) -> Dict[str, Any]:
        """
        Emit one golden table: pn, moments or estimate
        """
        kind = parsed_query.get("kind")
        handlers = {
            "pn": self._pn,
            "moments": self._moments,
            "estimate": self._estimate,
        }
        if kind not in handlers:
            return {"status": "error", "message": f"Unknown table kind: {kind}"}
        return handlers[kind](parsed_query)

    def _pn(self, parsed_query: Dict[str, Any]) -> Dict[str, Any]:
        level = parsed_query.get("level")
        if level is None:
            level = 2
        symmetrizer = pn_matrix(level, self.config.dim, self.config.q)
        data = symmetrizer.to_dict()
        header = ["word"] + data["words"]
        rows = [[word] + row for word, row in zip(data["words"], data["matrix"])]
        return {
            "status": "success",
            "message": f"P_{level} for d={self.config.dim}, q={self.config.q}",
            "report": {"table": "pn", "symmetrizer": data},
            "table": (header, rows),
        }

    def _moments(self, parsed_query: Dict[str, Any]) -> Dict[str, Any]:
        k_max = parsed_query.get("k_max") or MOMENT_ORDER
        rows = moment_table(self.config.q, k_max, max(self.config.max_level, k_max))
        header = ["k", "q", "matrix", "oracle", "delta"]
        return {
            "status": "success",
            "message": f"Moments up to k={k_max}, largest delta {max(r['delta'] for r in rows):.3e}",
            "report": {"table": "moments", "rows": rows},
            "table": (header, [[r[h] for h in header] for r in rows]),
        }

    def _estimate(self, parsed_query: Dict[str, Any]) -> Dict[str, Any]:
        k_min = parsed_query.get("k_min") or 5
        k_max = parsed_query.get("k_max") or 20
        if self.config.dim < 2:
            return {"status": "error", "message": "The key estimate needs a letter other than e (dim >= 2)"}
        estimate = key_estimate_check([1], [1], range(k_min, k_max + 1), self.config.q, self.config.dim)
        return {
            "status": "success",
            "message": f"Key estimate k={k_min}..{k_max}, C={estimate.constant:.6e}",
            "report": {"table": "estimate", "estimate": estimate.to_dict()},
            "table": (["k", "lhs", "rhs"], [[r.k, r.lhs, r.rhs] for r in estimate.rows]),
        }
