import itertools
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n-1}; position i holds the image of i"""
    mapping: Tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(i) for i in self.mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"Not a permutation of 0..{len(mapping) - 1}: {self.mapping}")
        object.__setattr__(self, 'mapping', mapping)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(i) = self(other(i))"""
        if len(other) != len(self):
            raise ValueError("Cannot compose permutations of different sizes")
        return Permutation(tuple(self.mapping[j] for j in other.mapping))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for i, image in enumerate(self.mapping):
            inv[image] = i
        return Permutation(tuple(inv))

    def apply(self, word: Sequence[int]) -> Tuple[int, ...]:
        """Natural action on words: the letter at position i becomes word[sigma(i)]"""
        if len(word) != len(self.mapping):
            raise ValueError(f"Word of length {len(word)} for a permutation of {len(self.mapping)}")
        return tuple(word[j] for j in self.mapping)


def inversions(p: Permutation) -> int:
    """Number of pairs i < j with p(i) > p(j)"""
    mapping = p.mapping
    return sum(mapping[i] > mapping[j] for i, j in itertools.combinations(range(len(mapping)), 2))


def all_permutations(n: int) -> Iterator[Tuple[Permutation, int]]:
    """Every element of S_n in lexicographic order, with its inversion count"""
    for mapping in itertools.permutations(range(n)):
        p = Permutation(mapping)
        yield p, inversions(p)


def shuffle_representatives(n: int, m: int) -> List[Tuple[Permutation, int]]:
    """
    Minimal-inversion representatives of the cosets of S_{n-m} x S_m in S_n.

    They are exactly the permutations increasing on the first n-m positions and
    on the last m positions, so they are built from the m-subset of images of
    the last block instead of filtering all n! permutations.
    """
    if n < 0 or m < 0:
        raise ValueError(f"Sizes must be natural numbers, got n={n}, m={m}")
    if m > n:
        raise ValueError(f"Block size m={m} exceeds n={n}")

    representatives = []
    for tail in itertools.combinations(range(n), m):
        tail_set = set(tail)
        head = [i for i in range(n) if i not in tail_set]
        p = Permutation(tuple(head) + tail)
        # Inversions only occur across the two blocks
        count = sum(1 for b in tail for a in head if a > b)
        representatives.append((p, count))
    return representatives
