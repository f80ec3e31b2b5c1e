"""Sub-strategies for items whose optimal bins hold few, large-ish items.

PairPacker handles instances whose optimal bins each hold exactly two items
(one advice bit per item: has the partner already arrived?). HarmonicType3
is Harmonic restricted to two classes, for items in (1/4, 1/2].
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..baselines import NextFit, OnlineAlgorithm, best_fit_bin, first_fit_bin, run_online
from ..errors import InvalidParams, NoFeasibleBin, OutOfRange
from ..model import Packing, RunResult
from ..oracle import DEFAULT_BUDGET, opt_exact
from ..tape import AdviceTape
from .optimal import ADVICE_INCONSISTENT

QUARTER = Fraction(1, 4)
THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)


def perfect_pairing(seq: Sequence[Fraction]) -> list[tuple[int, int]] | None:
    """Pairs of items sharing a bin, or None if no perfect pairing fits.

    Matching the largest remaining item with the smallest is optimal for
    this threshold structure, so failure here means no pairing exists.
    """
    if len(seq) % 2:
        return None
    order = sorted(range(len(seq)), key=lambda i: (seq[i], i))
    pairs = []
    for k in range(len(seq) // 2):
        a, b = order[k], order[-1 - k]
        if seq[a] + seq[b] > 1:
            return None
        pairs.append((min(a, b), max(a, b)))
    return sorted(pairs)


def pair_packer_oracle(seq: Sequence[Fraction], pairs=None, certify: bool = True,
                       node_budget: int = DEFAULT_BUDGET) -> str:
    """Bit i is 1 iff item i's partner arrived before it."""
    if pairs is None:
        pairs = perfect_pairing(seq)
        if pairs is None:
            raise InvalidParams("instance has no perfect two-per-bin pairing")
    if certify:
        opt, _ = opt_exact(seq, node_budget)
        if 2 * opt != len(seq):
            raise InvalidParams(f"OPT = {opt}, so a two-per-bin packing is not optimal")
    first_of = {}
    for a, b in pairs:
        first_of[max(a, b)] = min(a, b)
    return "".join("1" if i in first_of else "0" for i in range(len(seq)))


class PairPacker(OnlineAlgorithm):
    """Bit 0 opens a bin; bit 1 Best-Fits the item onto a bin still holding one item.

    With ``strict`` a bit-1 item that fits nowhere raises
    :class:`NoFeasibleBin`; otherwise the run is flagged and falls back to
    First-Fit over this packer's bins.
    """

    name = "pairs"

    def __init__(self, tape: AdviceTape | None = None, packing: Packing | None = None,
                 strict: bool = True):
        super().__init__(packing)
        self.tape = tape
        self.strict = strict
        self.waiting: list[int] = []

    def pack(self, index, size):
        return self.pack_with(index, size, bool(self.tape.read_bit()))

    def pack_with(self, index, size, partner_seen: bool) -> int:
        if not partner_seen:
            b = self.open(index, size)
            self.waiting.append(b)
            return b
        b = best_fit_bin(self.packing, self.waiting, size)
        if b is not None:
            self.waiting.remove(b)
            return self.packing.place(b, index, size)
        if self.strict:
            raise NoFeasibleBin(f"item {index} ({size}) has no open partner bin")
        self.flags.add(ADVICE_INCONSISTENT)
        b = first_fit_bin(self.packing, self.bins, size)
        if b is None:
            return self.open(index, size)
        if b in self.waiting:
            self.waiting.remove(b)
        return self.packing.place(b, index, size)


def harmonic_weight(size: Fraction) -> Fraction:
    if THIRD < size <= HALF:
        return HALF
    if QUARTER < size <= THIRD:
        return THIRD
    raise OutOfRange(f"{size} outside (1/4, 1/2]")


class HarmonicType3(OnlineAlgorithm):
    """Next-Fit on (1/3, 1/2] (two per bin) and on (1/4, 1/3] (three per bin).

    With ``strict=False`` the lower class is widened to (0, 1/3] so that
    misrouted items never abort a composite run.
    """

    name = "harmonic3"

    def __init__(self, packing: Packing | None = None, strict: bool = True):
        super().__init__(packing)
        self.strict = strict
        self.pairs = NextFit(self.packing)
        self.triples = NextFit(self.packing)

    def pack(self, index, size):
        if size > HALF or (self.strict and size <= QUARTER):
            raise OutOfRange(f"{size} outside (1/4, 1/2]")
        sub = self.pairs if size > THIRD else self.triples
        before = len(sub.bins)
        b = sub.pack(index, size)
        if len(sub.bins) > before:
            self.bins.append(b)
        return b


def harmonic_type3(seq: Sequence[Fraction]) -> RunResult:
    return run_online(HarmonicType3(), seq)
