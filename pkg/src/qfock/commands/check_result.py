import logging
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Tuple

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    params: Dict[str, Any]
    residual: float
    bound: float
    wall_time: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return math.isfinite(self.residual) and self.residual <= self.bound

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "name": self.name,
            "params": self.params,
            "residual": self.residual,
            "bound": self.bound,
            "passed": self.passed,
            "wall_time": self.wall_time,
        }
        if self.details:
            result["details"] = self.details
        return result


def run_check(name: str, params: Dict[str, Any], bound: float,
              check: Callable[[], Tuple[float, Dict[str, Any]]]) -> CheckResult:
    """Times one check; `check` returns (residual, details)"""
    logger.info(f"Running check {name}")
    start = time.perf_counter()
    residual, details = check()
    result = CheckResult(name, params, float(residual), float(bound), time.perf_counter() - start, details)
    if not result.passed:
        logger.error(f"Check {name} failed: residual {result.residual:.3e} > bound {result.bound:.3e}")
    return result
