"""Reduction chain: binary string guessing -> binary separation -> bin packing.

A separation solver built on an online bin packer turns each value into an
item just under 1/2 and calls it "large" iff the packer puts it next to one
of the 1/2 + eps_min anchor items. A string guesser drives any separation
solver by binary search over (0, 1): every zero becomes a "large" value and
every one a "small" value, so answers never contradict earlier reveals.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..baselines import OnlineAlgorithm
from ..errors import InvalidParams
from ..model import Packing

LARGE, SMALL = "large", "small"
DEFAULT_EPS_MIN = Fraction(1, 100)
DEFAULT_EPS_MAX = Fraction(1, 10)


def default_shift(eps_min: Fraction, eps_max: Fraction) -> Callable[[Fraction], Fraction]:
    """Strictly decreasing map from positive values into (eps_min, eps_max)."""
    def f(value: Fraction) -> Fraction:
        return eps_min + (eps_max - eps_min) / (1 + value)
    return f


@dataclass
class Step:
    value: Fraction
    guess: str
    actual: str | None = None
    item: Fraction | None = None

    @property
    def mistake(self) -> bool:
        return self.guess != self.actual


@dataclass
class ReductionTrace:
    steps: list[Step] = field(default_factory=list)
    items: list[Fraction] = field(default_factory=list)
    packing: Packing | None = None
    witness: Packing | None = None

    @property
    def mistakes(self) -> int:
        return sum(s.mistake for s in self.steps)

    @property
    def opt(self) -> int:
        return len(self.steps)

    @property
    def cost(self) -> int:
        return self.packing.cost

    @property
    def extra_bins(self) -> int:
        return self.cost - self.opt


class SeparationFromBinPacking:
    """Binary separation solver backed by an advice-free online packer."""

    def __init__(self, inner: OnlineAlgorithm, n_large: int, n_small: int,
                 eps_min=DEFAULT_EPS_MIN, eps_max=DEFAULT_EPS_MAX,
                 f: Callable[[Fraction], Fraction] | None = None):
        eps_min, eps_max = Fraction(eps_min), Fraction(eps_max)
        if not 0 < eps_min < eps_max < Fraction(1, 6):
            raise InvalidParams("need 0 < eps_min < eps_max < 1/6")
        if n_large < 0 or n_small < 0:
            raise InvalidParams("class sizes must be non-negative")
        self.inner = inner
        self.n_large = n_large
        self.n_small = n_small
        self.eps_min = eps_min
        self.f = f or default_shift(eps_min, eps_max)
        self.trace = ReductionTrace()
        self.anchor_bins: set[int] = set()
        self.anchor = Fraction(1, 2) + eps_min
        for _ in range(n_large):
            self.anchor_bins.add(self._feed(self.anchor))

    def _feed(self, size: Fraction) -> int:
        index = len(self.trace.items)
        self.trace.items.append(size)
        return self.inner.pack(index, size)

    def classify(self, value: Fraction) -> str:
        item = Fraction(1, 2) - self.f(value)
        b = self._feed(item)
        guess = LARGE if b in self.anchor_bins else SMALL
        self.trace.steps.append(Step(value, guess, item=item))
        return guess

    def reveal(self, actual: str) -> None:
        self.trace.steps[-1].actual = actual

    def finish(self) -> ReductionTrace:
        """Feed the complements of the small probes and return the completed trace."""
        smalls = [s for s in self.trace.steps if s.actual == SMALL]
        large_steps = len(self.trace.steps) - len(smalls)
        if large_steps != self.n_large or len(smalls) != self.n_small:
            raise InvalidParams("revealed classes disagree with the declared class sizes")
        for s in smalls:
            self._feed(1 - s.item)
        self.trace.packing = self.inner.packing
        self.trace.witness = self._witness()
        return self.trace

    def _witness(self) -> Packing:
        """Anchors with large probes, small probes with their complements."""
        items = self.trace.items
        packing = Packing()
        n1 = self.n_large
        larges = [n1 + t for t, s in enumerate(self.trace.steps) if s.actual == LARGE]
        smalls = [n1 + t for t, s in enumerate(self.trace.steps) if s.actual == SMALL]
        for anchor, probe in zip(range(n1), larges):
            b = packing.place(None, anchor, items[anchor])
            packing.place(b, probe, items[probe])
        first_complement = n1 + len(self.trace.steps)
        for k, probe in enumerate(smalls):
            b = packing.place(None, probe, items[probe])
            packing.place(b, first_complement + k, items[first_complement + k])
        return packing


class KnownPartitionSeparation:
    """Separation solver that already knows every class; never wrong."""

    def __init__(self, classes: Sequence[str]):
        self.classes = list(classes)
        self.trace = ReductionTrace()

    def classify(self, value):
        guess = self.classes[len(self.trace.steps)]
        self.trace.steps.append(Step(Fraction(value), guess))
        return guess

    def reveal(self, actual):
        self.trace.steps[-1].actual = actual

    def finish(self):
        return self.trace


@dataclass
class GuessStep:
    probe: Fraction
    class_guess: str
    bit_guess: int
    actual_bit: int
    small_after: Fraction
    large_after: Fraction

    @property
    def mistake(self) -> bool:
        return self.bit_guess != self.actual_bit


class GuessingFromSeparation:
    """String guesser with known zero count, driving a separation solver."""

    def __init__(self, solver):
        self.solver = solver
        self.small = Fraction(0)
        self.large = Fraction(1)
        self.steps: list[GuessStep] = []
        self._pending = None

    def guess(self) -> int:
        mid = (self.small + self.large) / 2
        class_guess = self.solver.classify(mid)
        self._pending = (mid, class_guess)
        return 0 if class_guess == LARGE else 1

    def reveal(self, bit: int) -> None:
        mid, class_guess = self._pending
        if bit == 0:
            self.large = mid
            self.solver.reveal(LARGE)
        else:
            self.small = mid
            self.solver.reveal(SMALL)
        self.steps.append(GuessStep(mid, class_guess, 0 if class_guess == LARGE else 1,
                                    bit, self.small, self.large))

    @property
    def mistakes(self) -> int:
        return sum(s.mistake for s in self.steps)


@dataclass
class ChainResult:
    bits: list[int]
    guesses: list[GuessStep]
    separation: ReductionTrace

    @property
    def mistakes(self) -> int:
        return sum(s.mistake for s in self.guesses)


def run_guessing(bits: Sequence[int], make_solver: Callable[[int, int], object]) -> ChainResult:
    """Play a whole bit string; ``make_solver(n_zeros, n_ones)`` builds the separation solver."""
    bits = [int(b) for b in bits]
    zeros = bits.count(0)
    solver = make_solver(zeros, len(bits) - zeros)
    guesser = GuessingFromSeparation(solver)
    for bit in bits:
        guesser.guess()
        guesser.reveal(bit)
    return ChainResult(bits, guesser.steps, solver.finish())


def reduce_with_packer(bits: Sequence[int], make_inner: Callable[[], OnlineAlgorithm],
                       eps_min=DEFAULT_EPS_MIN, eps_max=DEFAULT_EPS_MAX) -> ChainResult:
    """End to end: bit string -> separation -> the given online packer."""
    return run_guessing(
        bits, lambda n1, n2: SeparationFromBinPacking(make_inner(), n1, n2, eps_min, eps_max))


def reduce_with_known_partition(bits: Sequence[int]) -> ChainResult:
    bits = [int(b) for b in bits]
    return run_guessing(
        bits, lambda n1, n2: KnownPartitionSeparation([LARGE if b == 0 else SMALL for b in bits]))


def random_bits(n: int, seed) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(2) for _ in range(n)]
