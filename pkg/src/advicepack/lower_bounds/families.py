"""Adversarial instance families whose members share a prefix but need distinct advice.

Index family (parameters n, k): n - k small items 1/4, 1/8, ..., 1/2^(n-k+1)
whose bin assignment is given by a vector V, followed by k fillers that top
every bin up to exactly 1. Each member has a unique optimal packing.

Level family (parameters n, m): with capacity 2m, n/2 unit items are split
into bins of level at most m - 2, then each such bin is completed by one item
of size 2m - level, and the rest of the sequence is full-capacity items.
Everything is normalized to capacity 1 on generation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..errors import InvalidLevels, InvalidVector
from ..model import Packing


@dataclass(frozen=True)
class IndexVector:
    """Bin index (1..k) for each of the n - k small items; starts 1, 2, ..., k."""

    n: int
    k: int
    v: tuple[int, ...]

    def __post_init__(self):
        n, k, v = self.n, self.k, self.v
        if not (1 <= k <= n - 1 and 2 * k <= n):
            raise InvalidVector(f"need 1 <= k <= n-1 and 2k <= n (n={n}, k={k})")
        if len(v) != n - k:
            raise InvalidVector(f"vector has {len(v)} entries, expected {n - k}")
        if tuple(v[:k]) != tuple(range(1, k + 1)):
            raise InvalidVector(f"vector must start with 1..{k}")
        if any(not 1 <= x <= k for x in v):
            raise InvalidVector(f"entries must lie in 1..{k}")


def small_item(i: int) -> Fraction:
    """The i-th small item (1-based): 1/2^(i+1)."""
    return Fraction(1, 2 ** (i + 1))


def index_family_sequence(vec: IndexVector) -> tuple[Fraction, ...]:
    smalls = [small_item(i) for i in range(1, vec.n - vec.k + 1)]
    fillers = []
    for j in range(1, vec.k + 1):
        fillers.append(1 - sum((a for a, v in zip(smalls, vec.v) if v == j), Fraction(0)))
    return tuple(smalls + fillers)


def index_family_packing(vec: IndexVector) -> Packing:
    """The fully packed k-bin packing the vector prescribes."""
    seq = index_family_sequence(vec)
    packing = Packing()
    bins = [packing.open_bin() for _ in range(vec.k)]
    for i, v in enumerate(vec.v):
        packing.place(bins[v - 1], i, seq[i])
    for j in range(vec.k):
        i = vec.n - vec.k + j
        packing.place(bins[j], i, seq[i])
    return packing


def index_family_size(n: int, k: int) -> int:
    return k ** (n - 2 * k)


def index_family(n: int, k: int) -> Iterator[IndexVector]:
    """Lazily yield every vector of the family, in lexicographic order."""
    prefix = tuple(range(1, k + 1))
    for tail in itertools.product(range(1, k + 1), repeat=n - 2 * k):
        yield IndexVector(n, k, prefix + tail)


def index_family_member(n: int, k: int, index: int) -> IndexVector:
    """The ``index``-th vector (0-based) in :func:`index_family` order."""
    size = index_family_size(n, k)
    if not 0 <= index < size:
        raise InvalidVector(f"index {index} outside family of size {size}")
    tail = []
    for _ in range(n - 2 * k):
        index, digit = divmod(index, k)
        tail.append(digit + 1)
    return IndexVector(n, k, tuple(range(1, k + 1)) + tuple(reversed(tail)))


# -- level family -----------------------------------------------------------

def _check_levels(n, m, levels):
    if n % 2 or n < 0:
        raise InvalidLevels(f"n must be even and non-negative, got {n}")
    if m < 3:
        raise InvalidLevels(f"need m >= 3, got {m}")
    levels = tuple(levels)
    if len(levels) != m - 2:
        raise InvalidLevels(f"expected {m - 2} level counts, got {len(levels)}")
    if any(a < 0 for a in levels):
        raise InvalidLevels("level counts must be non-negative")
    if sum(i * a for i, a in enumerate(levels, start=1)) != n // 2:
        raise InvalidLevels(f"sum of i * a_i must equal n/2 = {n // 2}")
    return levels


def level_family_sequence(n: int, m: int, levels: Sequence[int]) -> tuple[Fraction, ...]:
    """``levels[i-1]`` is the number of bins holding i unit items (i = 1..m-2)."""
    levels = _check_levels(n, m, levels)
    cap = 2 * m
    seq = [Fraction(1, cap)] * (n // 2)
    for level, count in enumerate(levels, start=1):
        seq += [Fraction(cap - level, cap)] * count
    seq += [Fraction(1)] * (n // 2 - sum(levels))
    return tuple(seq)


def level_family_packing(n: int, m: int, levels: Sequence[int]) -> Packing:
    levels = _check_levels(n, m, levels)
    seq = level_family_sequence(n, m, levels)
    packing = Packing()
    unit = 0
    big = n // 2
    for level, count in enumerate(levels, start=1):
        for _ in range(count):
            b = packing.open_bin()
            for _ in range(level):
                packing.place(b, unit, seq[unit])
                unit += 1
            packing.place(b, big, seq[big])
            big += 1
    while big < n:
        packing.place(None, big, seq[big])
        big += 1
    return packing


def levels_from_bins(bin_levels: Sequence[int], m: int) -> tuple[int, ...]:
    """Turn a list of per-bin unit counts, e.g. (1,1,1,1,2,2,3,4), into level counts."""
    counts = [0] * (m - 2)
    for level in bin_levels:
        if not 1 <= level <= m - 2:
            raise InvalidLevels(f"bin level {level} outside 1..{m - 2}")
        counts[level - 1] += 1
    return tuple(counts)


def level_family(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Every admissible level-count vector for the given n and m."""
    target = n // 2
    top = m - 2

    def rec(i, remaining):
        if i == 1:
            yield (remaining,)
            return
        for a in range(remaining // i + 1):
            for rest in rec(i - 1, remaining - i * a):
                yield rest + (a,)

    if n % 2 == 0 and top >= 1:
        yield from rec(top, target)
