from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, Mapping, Sequence, Tuple

import numpy as np

from ..utils.errors import BasisMismatch
from .basis import FockBasis, Word, foreign_count


@dataclass(frozen=True, eq=False)
class FockVector:
    """Sparse map from words to real coefficients on a truncated basis"""
    basis: FockBasis
    coefficients: Mapping[Word, float] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[Word, float] = {}
        for word, value in self.coefficients.items():
            word = tuple(int(letter) for letter in word)
            # Raises GuardViolation for words outside the truncation
            self.basis.index_of(word)
            if value != 0:
                cleaned[word] = cleaned.get(word, 0.0) + float(value)
        object.__setattr__(self, 'coefficients', cleaned)

    @classmethod
    def from_array(cls, basis: FockBasis, array: np.ndarray) -> "FockVector":
        array = np.asarray(array, dtype=float)
        if array.shape != (basis.size,):
            raise BasisMismatch(f"Array of shape {array.shape} for a basis of size {basis.size}")
        words = basis.all_words()
        vector = cls(basis, {words[i]: array[i] for i in np.flatnonzero(array)})
        # Keep the exact array instead of recomputing it
        vector.__dict__['array'] = array.copy()
        return vector

    @classmethod
    def vacuum(cls, basis: FockBasis) -> "FockVector":
        return cls(basis, {(): 1.0})

    @classmethod
    def word(cls, basis: FockBasis, word: Sequence[int], coefficient: float = 1.0) -> "FockVector":
        return cls(basis, {tuple(word): coefficient})

    @classmethod
    def e_power_series(cls, basis: FockBasis, coefficients: Sequence[float]) -> "FockVector":
        """sum_k a_k e^{(x)k}"""
        return cls(basis, {(0,) * k: a for k, a in enumerate(coefficients) if a != 0})

    @cached_property
    def array(self) -> np.ndarray:
        values = np.zeros(self.basis.size)
        for word, value in self.coefficients.items():
            values[self.basis.index_of(word)] = value
        return values

    @property
    def max_level(self) -> int:
        """Highest level carrying mass, -1 for the zero vector"""
        return max((len(w) for w in self.coefficients), default=-1)

    @property
    def max_foreign(self) -> int:
        return max((foreign_count(w) for w in self.coefficients), default=0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def items(self) -> Iterator[Tuple[Word, float]]:
        return iter(sorted(self.coefficients.items(), key=lambda item: (len(item[0]), item[0])))

    def __getitem__(self, word: Sequence[int]) -> float:
        return self.coefficients.get(tuple(word), 0.0)

    def _check(self, other: "FockVector") -> None:
        if not self.basis.same_as(other.basis):
            raise BasisMismatch(f"{self.basis} vs {other.basis}")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        return FockVector.from_array(self.basis, self.array + other.array)

    def __sub__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        return FockVector.from_array(self.basis, self.array - other.array)

    def __mul__(self, scalar: float) -> "FockVector":
        return FockVector(self.basis, {w: scalar * v for w, v in self.coefficients.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "FockVector":
        return self * -1.0

    def to_dict(self) -> Dict[str, float]:
        return {".".join(map(str, word)) or "Ω": value for word, value in self.items()}

    def __repr__(self) -> str:
        terms = " + ".join(f"{v:g}*{word or 'Ω'}" for word, v in self.items())
        return f"FockVector({terms or '0'})"
