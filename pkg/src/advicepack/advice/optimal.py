"""Advice schemes that reproduce an optimal packing.

* Full index: one bin index per item, Best-Fit for the final two items.
* Distinct replay: the multiplicity of every size in a known universe; the
  online side solves the offline problem itself and follows that plan.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Sequence

from ..baselines import OnlineAlgorithm, best_fit_bin, first_fit_bin
from ..errors import UnknownSize
from ..model import Packing
from ..oracle import DEFAULT_BUDGET, opt_configurations, opt_exact
from ..tape import (AdviceTape, bit_width, ceil_log2, encode_fixed, encode_self_delimited,
                    encode_unary)

ADVICE_INCONSISTENT = "advice-inconsistent"


def full_index_oracle(seq: Sequence[Fraction], witness: Packing | None = None,
                      node_budget: int = DEFAULT_BUDGET) -> str:
    """Unary ceil(log OPT), then a ceil(log OPT)-bit bin index for all but the last two items."""
    if witness is None:
        _, witness = opt_exact(seq, node_budget)
    rank = {}
    for b, bin_ in enumerate(witness.bins):
        if bin_.items:
            rank[b] = len(rank)
    width = ceil_log2(len(rank))
    bits = [encode_unary(width)]
    for i in range(len(seq) - 2):
        bits.append(encode_fixed(rank[witness.assignment[i]], width))
    return "".join(bits)


class FullIndex(OnlineAlgorithm):
    """Replays advised bin indices; packs the last two items with Best-Fit.

    Knowing where the advice stops requires the sequence length ``n``.
    """

    name = "full-index"

    def __init__(self, tape: AdviceTape, n: int, packing: Packing | None = None):
        super().__init__(packing)
        self.tape = tape
        self.n = n
        self.width = tape.read_unary()
        self.seen = 0
        self.advised: dict[int, int] = {}

    def pack(self, index, size):
        position = self.seen
        self.seen += 1
        if position < self.n - 2:
            slot = self.tape.read_fixed(self.width)
            b = self.advised.get(slot)
            if b is None:
                b = self.open(index, size)
                self.advised[slot] = b
                return b
            if self.packing.bins[b].fits(size):
                return self.packing.place(b, index, size)
            self.flags.add(ADVICE_INCONSISTENT)
            b = first_fit_bin(self.packing, self.bins, size)
        else:
            b = best_fit_bin(self.packing, self.bins, size)
        if b is None:
            return self.open(index, size)
        return self.packing.place(b, index, size)


def _check_universe(universe):
    universe = [Fraction(u) for u in universe]
    if len(set(universe)) != len(universe):
        raise ValueError("universe sizes must be distinct")
    return universe


def frequency_oracle(seq: Sequence[Fraction], universe: Sequence[Fraction]) -> str:
    """Self-delimited field width ceil(log(n+1)), then one count per universe size."""
    universe = _check_universe(universe)
    counts = Counter(seq)
    unknown = set(counts) - set(universe)
    if unknown:
        raise UnknownSize(f"sizes {sorted(unknown)} are outside the universe")
    width = bit_width(len(seq))
    return encode_self_delimited(width) + "".join(
        encode_fixed(counts[u], width) for u in universe)


class DistinctReplay(OnlineAlgorithm):
    """Reads the size multiplicities, plans an optimal packing, then fills its slots."""

    name = "distinct"

    def __init__(self, tape: AdviceTape, universe: Sequence[Fraction],
                 packing: Packing | None = None):
        super().__init__(packing)
        self.tape = tape
        self.universe = _check_universe(universe)
        width = tape.read_self_delimited()
        counts = {u: tape.read_fixed(width) for u in self.universe}
        self.planned_cost, plan = opt_configurations(counts)
        self.slots = [Counter(b) for b in plan]
        self.realized: list[int | None] = [None] * len(plan)

    def pack(self, index, size):
        if size not in self.universe:
            raise UnknownSize(f"{size} is outside the universe")
        for k, slots in enumerate(self.slots):
            if slots[size]:
                slots[size] -= 1
                b = self.realized[k]
                if b is None:
                    b = self.realized[k] = self.open(index, size)
                    return b
                return self.packing.place(b, index, size)
        self.flags.add(ADVICE_INCONSISTENT)
        b = first_fit_bin(self.packing, self.bins, size)
        if b is None:
            return self.open(index, size)
        return self.packing.place(b, index, size)
