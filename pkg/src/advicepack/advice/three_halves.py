"""Reserve-critical-bins algorithm: O(log n) advice, cost at most 3/2 OPT + 3.

The only advice is the number of medium items. That many critical bins are
opened up front with 2/3 of their space reserved for a medium item; all
other placements are First-Fit on virtual levels (actual load plus any
unused reservation).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..baselines import OnlineAlgorithm, first_fit_bin
from ..model import Packing
from ..tape import AdviceTape, bit_width, encode_fixed, encode_self_delimited
from .optimal import ADVICE_INCONSISTENT

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)

TINY, SMALL, MEDIUM, LARGE = "tiny", "small", "medium", "large"


def size_class(size: Fraction) -> str:
    if size <= THIRD:
        return TINY
    if size <= HALF:
        return SMALL
    if size <= TWO_THIRDS:
        return MEDIUM
    return LARGE


def three_halves_oracle(seq: Sequence[Fraction]) -> str:
    width = bit_width(len(seq))
    alpha = sum(1 for x in seq if size_class(x) == MEDIUM)
    return encode_self_delimited(width) + encode_fixed(alpha, width)


class ThreeHalves(OnlineAlgorithm):
    name = "three-halves"

    def __init__(self, tape: AdviceTape, packing: Packing | None = None):
        super().__init__(packing)
        self.tape = tape
        width = tape.read_self_delimited()
        self.alpha = tape.read_fixed(width)
        self.virtual: dict[int, Fraction] = {}
        self.critical: list[int] = []
        self.has_medium: set[int] = set()
        for _ in range(self.alpha):
            b = self.packing.open_bin()
            self.bins.append(b)
            self.critical.append(b)
            self.virtual[b] = TWO_THIRDS

    @property
    def unmatched(self) -> int:
        """Critical bins still waiting for their medium item."""
        return len(self.critical) - len(self.has_medium)

    def pack(self, index, size):
        kind = size_class(size)
        if kind == LARGE:
            b = self.open(index, size)
            self.virtual[b] = size
            return b
        if kind == MEDIUM:
            b = next((c for c in self.critical if c not in self.has_medium), None)
            if b is None:
                self.flags.add(ADVICE_INCONSISTENT)
                b = self.open(index, size)
                self.virtual[b] = size
                return b
            self.packing.place(b, index, size)
            self.has_medium.add(b)
            self.virtual[b] = self.packing.bins[b].load
            return b
        b = first_fit_bin(self.packing, self.bins, size, level=self.virtual.__getitem__)
        if b is None:
            b = self.open(index, size)
            self.virtual[b] = size
            return b
        self.packing.place(b, index, size)
        self.virtual[b] += size
        return b

    def invariant_violations(self) -> list[str]:
        problems = []
        seen_regular = False
        for b in self.bins:
            if b in self.critical:
                if seen_regular:
                    problems.append(f"critical bin {b} after a regular bin")
            else:
                seen_regular = True
            actual = self.packing.bins[b].load
            virtual = self.virtual[b]
            if not actual <= virtual <= actual + TWO_THIRDS:
                problems.append(f"bin {b}: virtual {virtual} vs actual {actual}")
            if virtual > 1:
                problems.append(f"bin {b}: virtual level {virtual} above 1")
        return problems
