"""Composite algorithm with two advice bits per item: cost at most (4/3 + eps) OPT + 3.

The oracle splits the bins of an optimal packing into *good* bins (items
below 1/4 total at least 5*eps1) and *bad* bins, with eps1 = 11*eps/60.

Tape layout::

    self-delimited n
    grid = ceil(1/eps1) counts, each ceil(log(n+1)) bits: good-bin items above
        1/6, bucketed by size rounded up to a multiple of eps1
    per item, in arrival order, two bits:
        00  item sits in a good bin
        01  bad bin, type 1 or 3 (told apart online by size vs 1/2); also tiny items
        1b  bad bin, type 2; b = 1 iff the partner already arrived

Good items are packed into an optimal packing of the rounded large sizes,
with small items First-Fit on levels that count not-yet-arrived large items
at their rounded size. Bad items go to one of four disjoint bin groups:
tiny items (< 5*eps1) First-Fit, type 1 alone, type 2 pairs, type 3 Harmonic.
"""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Sequence

from ..baselines import FirstFit, OnlineAlgorithm, first_fit_bin
from ..errors import InvalidParams
from ..model import Packing
from ..oracle import DEFAULT_BUDGET, opt_configurations, opt_exact
from ..tape import (AdviceTape, bit_width, encode_fixed, encode_self_delimited,
                    self_delimited_length)
from .bad_bins import HarmonicType3, PairPacker
from .optimal import ADVICE_INCONSISTENT

QUARTER = Fraction(1, 4)
SIXTH = Fraction(1, 6)
HALF = Fraction(1, 2)

GOOD, BAD_1_OR_3, PAIR_FIRST, PAIR_SECOND = "00", "01", "10", "11"


class Params:
    """Derived constants for a given eps in (0, 1/11)."""

    def __init__(self, eps):
        eps = Fraction(eps)
        if not 0 < eps < Fraction(1, 11):
            raise InvalidParams(f"eps must lie in (0, 1/11), got {eps}")
        self.eps = eps
        self.eps1 = eps * 11 / 60
        self.tiny = 5 * self.eps1
        self.grid = math.ceil(1 / self.eps1)

    def rounded_class(self, size: Fraction) -> int:
        """Index c in 1..grid with (c-1)*eps1 < size <= c*eps1."""
        return math.ceil(size / self.eps1)

    def rounded_size(self, cls: int) -> Fraction:
        return min(cls * self.eps1, Fraction(1))


def is_good_bin(sizes, params: Params) -> bool:
    return sum((x for x in sizes if x < QUARTER), Fraction(0)) >= params.tiny


def four_thirds_oracle(seq: Sequence[Fraction], eps, witness: Packing | None = None,
                       node_budget: int = DEFAULT_BUDGET) -> str:
    params = Params(eps)
    n = len(seq)
    if witness is None:
        _, witness = opt_exact(seq, node_budget)
    codes = [None] * n
    counts = [0] * params.grid
    normal = []
    for bin_ in witness.bins:
        if not bin_.items:
            continue
        if is_good_bin([seq[i] for i in bin_.items], params):
            for i in bin_.items:
                codes[i] = GOOD
                if seq[i] > SIXTH:
                    counts[params.rounded_class(seq[i]) - 1] += 1
            continue
        for i in bin_.items:
            if seq[i] < params.tiny:
                codes[i] = BAD_1_OR_3
            else:
                normal.append(i)
    # Types come from an optimal packing of the bad bins' normal items alone.
    if normal:
        _, sub = opt_exact([seq[i] for i in normal], node_budget)
        for group in sub.groups():
            members = sorted(normal[j] for j in group)
            if len(members) == 2:
                codes[members[0]], codes[members[1]] = PAIR_FIRST, PAIR_SECOND
            else:
                for i in members:
                    codes[i] = BAD_1_OR_3
    width = bit_width(n)
    header = encode_self_delimited(n) + "".join(encode_fixed(c, width) for c in counts)
    return header + "".join(codes)


def header_length(n: int, eps) -> int:
    """Bits in the tape header for a sequence of length ``n``."""
    return self_delimited_length(n) + Params(eps).grid * bit_width(n)


class _GoodHandler:
    """Packs good items: reserved slots for large items, First-Fit for small ones."""

    def __init__(self, owner: "FourThirds", counts: list[int]):
        self.owner = owner
        params = owner.params
        packing = owner.packing
        demand = {params.rounded_size(c + 1): k for c, k in enumerate(counts) if k}
        _, plan = opt_configurations(demand)
        self.bins: list[int] = []
        self.slots: dict[int, Counter] = {}
        self.level: dict[int, Fraction] = {}
        for config in plan:
            b = packing.open_bin()
            self.bins.append(b)
            self.slots[b] = Counter(params.rounded_class(s) for s in config)
            self.level[b] = sum(config, Fraction(0))

    def pack(self, index, size):
        owner = self.owner
        params = owner.params
        packing = owner.packing
        if size > SIXTH:
            cls = params.rounded_class(size)
            for b in self.bins:
                if self.slots.get(b, {}).get(cls):
                    self.slots[b][cls] -= 1
                    packing.place(b, index, size)
                    self.level[b] += size - params.rounded_size(cls)
                    return b
            owner.flags.add(ADVICE_INCONSISTENT)
        b = first_fit_bin(packing, self.bins, size, level=self.level.__getitem__)
        if b is None:
            b = packing.place(None, index, size)
            self.bins.append(b)
            self.level[b] = size
            return b
        packing.place(b, index, size)
        self.level[b] += size
        return b


class FourThirds(OnlineAlgorithm):
    name = "four-thirds"

    def __init__(self, tape: AdviceTape, eps, packing: Packing | None = None):
        super().__init__(packing)
        self.tape = tape
        self.params = Params(eps)
        self.name = f"four-thirds:{self.params.eps}"
        n = tape.read_self_delimited()
        width = bit_width(n)
        counts = [tape.read_fixed(width) for _ in range(self.params.grid)]
        self.good = _GoodHandler(self, counts)
        self.tiny = FirstFit(self.packing)
        self.single = OnlineAlgorithm(self.packing)
        self.pairs = PairPacker(packing=self.packing, strict=False)
        self.triples = HarmonicType3(self.packing, strict=False)

    def pack(self, index, size):
        code = f"{self.tape.read_bit()}{self.tape.read_bit()}"
        if code == GOOD:
            b = self.good.pack(index, size)
        elif size < self.params.tiny:
            b = self.tiny.pack(index, size)
        elif code == BAD_1_OR_3:
            if size > HALF:
                b = self.single.open(index, size)
            else:
                b = self.triples.pack(index, size)
        else:
            b = self.pairs.pack_with(index, size, code == PAIR_SECOND)
            self.flags |= self.pairs.flags
        return b
