from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Mapping, Optional

from ..combinatorics import check_q
from ..settings import dim_cap

FORMATS = ("json", "csv")


@dataclass(frozen=True)
class RunConfig:
    q: float
    dim: int
    max_level: int
    tol: float
    cut: int
    steps: int
    seed: int
    samples: int
    format: str
    report_path: Optional[str]
    dim_cap: int

    def __post_init__(self):
        check_q(self.q)
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.max_level < 1:
            raise ValueError(f"max_level must be >= 1, got {self.max_level}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.cut < 0 or self.steps < 0 or self.seed < 0:
            raise ValueError("cut, steps and seed must be natural numbers")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def create_config(overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """Defaults, then the environment, then explicit overrides"""
    values: Dict[str, Any] = dict(
        q=0.5,
        dim=2,
        max_level=6,
        tol=1e-10,
        cut=0,
        steps=6,
        seed=0,
        samples=100,
        format="json",
        report_path=None,
    )
    values["dim_cap"] = dim_cap()

    if overrides is not None:
        known = {f.name for f in fields(RunConfig)} - {"dim_cap"}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"Unknown configuration keys: {sorted(unknown)}")
        values.update({key: value for key, value in overrides.items() if value is not None})

    return RunConfig(**values)
