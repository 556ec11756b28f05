import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..combinatorics import QScalar, check_q
from ..settings import dim_cap
from ..utils.errors import DimensionCapExceeded, GuardViolation

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

VACUUM: Word = ()
E_LETTER = 0  # the distinguished unit vector e = e_0


def remove_letter(word: Word, letter: int, q: float, from_right: bool = False) -> List[Tuple[Word, float]]:
    """
    Words obtained by deleting one occurrence of `letter`, with the positional
    weights of the annihilation operators: q^{i-1} counted from the left, or
    q^{n-i} counted from the right. Removing any letter of a run of equal
    letters gives the same word, so each run contributes one term
    q^{offset} [run length]_q.
    """
    n = len(word)
    removed = []
    position = 0
    for value, run in itertools.groupby(word):
        length = sum(1 for _ in run)
        if value == letter:
            offset = n - position - length if from_right else position
            weight = (q ** offset) * (1 - q ** length) / (1 - q)
            removed.append((word[:position] + word[position + 1:], weight))
        position += length
    return removed


def foreign_count(word: Word) -> int:
    """Number of letters different from e"""
    return sum(1 for letter in word if letter != E_LETTER)


class FockBasis:
    """
    Word basis of the q-Fock space truncated at level `max_level`.

    Level n holds the d^n words over d letters in lexicographic order. With
    `max_foreign` set, only words with at most that many letters other than e
    are kept; that subspace is invariant under every P_n, so q-inner products
    restricted to it are exact.
    """

    def __init__(self, dim: int, max_level: int, q: float, max_foreign: Optional[int] = None):
        if dim < 1:
            raise ValueError(f"Letter dimension must be >= 1, got {dim}")
        if max_level < 0:
            raise ValueError(f"Truncation level must be >= 0, got {max_level}")
        if max_foreign is not None and max_foreign < 0:
            raise ValueError(f"max_foreign must be >= 0, got {max_foreign}")
        check_q(q)

        self.dim = dim
        self.max_level = max_level
        self.q = float(q)
        self.qscalar = QScalar(self.q)
        self.max_foreign = max_foreign

        cap = dim_cap()
        self._levels: List[List[Word]] = []
        for n in range(max_level + 1):
            if max_foreign is None:
                if dim ** n > cap:
                    raise DimensionCapExceeded(
                        f"Level {n} of a {dim}-letter basis has {dim ** n} words, cap is {cap}"
                    )
                words = list(itertools.product(range(dim), repeat=n))
            else:
                words = self._restricted_words(n)
                if len(words) > cap:
                    raise DimensionCapExceeded(
                        f"Level {n} of the restricted basis has {len(words)} words, cap is {cap}"
                    )
            self._levels.append(words)

        self._offsets = [0]
        for words in self._levels:
            self._offsets.append(self._offsets[-1] + len(words))

        self._index: Dict[Word, int] = {}
        for words in self._levels:
            for word in words:
                self._index[word] = len(self._index)

        self.level_of = np.concatenate([
            np.full(len(words), n, dtype=np.int64) for n, words in enumerate(self._levels)
        ])
        self.foreign_of = np.array([foreign_count(w) for words in self._levels for w in words], dtype=np.int64)
        self._gram_cache: Dict[int, np.ndarray] = {}
        self._operator_cache: Dict[Tuple[str, int], object] = {}

        logger.debug(
            f"Built basis d={dim} N={max_level} q={self.q} max_foreign={max_foreign}: {self.size} words"
        )

    def _restricted_words(self, n: int) -> List[Word]:
        words = []
        for count in range(min(self.max_foreign, n) + 1):
            for positions in itertools.combinations(range(n), count):
                for letters in itertools.product(range(1, self.dim), repeat=count):
                    word = [E_LETTER] * n
                    for position, letter in zip(positions, letters):
                        word[position] = letter
                    words.append(tuple(word))
        return sorted(words)

    @property
    def key(self) -> Tuple:
        return (self.dim, self.max_level, self.q, self.max_foreign)

    @property
    def is_restricted(self) -> bool:
        return self.max_foreign is not None

    @property
    def size(self) -> int:
        return self._offsets[-1]

    def words(self, n: int) -> List[Word]:
        return self._levels[n]

    def all_words(self) -> List[Word]:
        return [w for words in self._levels for w in words]

    def level_slice(self, n: int) -> slice:
        return slice(self._offsets[n], self._offsets[n + 1])

    def contains(self, word: Sequence[int]) -> bool:
        return tuple(word) in self._index

    def index_of(self, word: Sequence[int]) -> int:
        word = tuple(word)
        try:
            return self._index[word]
        except KeyError:
            if len(word) > self.max_level:
                raise GuardViolation(f"Word of length {len(word)} exceeds truncation level {self.max_level}")
            raise GuardViolation(f"Word {word} is outside the basis (d={self.dim}, max_foreign={self.max_foreign})")

    def check_letter(self, letter: int) -> int:
        if not 0 <= letter < self.dim:
            raise ValueError(f"Letter {letter} outside 0..{self.dim - 1}")
        return letter

    def same_as(self, other: "FockBasis") -> bool:
        return self is other or self.key == other.key

    def __repr__(self) -> str:
        return f"FockBasis(dim={self.dim}, max_level={self.max_level}, q={self.q}, max_foreign={self.max_foreign})"
