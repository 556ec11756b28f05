import itertools
from typing import Iterator, List, Sequence, Tuple

Pairing = List[Tuple[int, int]]


def _all_pairings(items: List[int]) -> Iterator[Pairing]:
    if len(items) == 0:
        yield []
        return

    first_item = items[0]
    rest = items[1:]
    for i, item in enumerate(rest):
        first_pair = (first_item, item)
        for pairing in _all_pairings(rest[:i] + rest[i + 1:]):
            yield [first_pair] + pairing


def pair_partitions(size: int) -> List[Pairing]:
    """All (size-1)!! perfect matchings of {1..size}, each pair as (a, b) with a < b"""
    if size < 0 or size % 2 != 0:
        raise ValueError(f"Pair partitions need an even size, got {size}")
    return list(_all_pairings(list(range(1, size + 1))))


def crossings(pairing: Sequence[Tuple[int, int]]) -> int:
    """Number of pairs of blocks {a<b}, {c<d} with a < c < b < d"""
    blocks = [tuple(sorted(pair)) for pair in pairing]
    count = 0
    for (a, b), (c, d) in itertools.combinations(blocks, 2):
        if a < c < b < d or c < a < d < b:
            count += 1
    return count


def crossing_polynomial(size: int) -> List[int]:
    """Coefficients of sum over pairings of q^crossings, lowest degree first"""
    counts: List[int] = [0]
    for pairing in pair_partitions(size):
        cr = crossings(pairing)
        if cr >= len(counts):
            counts.extend([0] * (cr + 1 - len(counts)))
        counts[cr] += 1
    return counts
