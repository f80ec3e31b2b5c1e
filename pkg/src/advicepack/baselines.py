"""Advice-free online packers (Next-Fit, First-Fit, Best-Fit, Harmonic_K).

Every packer works against a :class:`~advicepack.model.Packing` that may be
shared with other packers; ``self.bins`` lists only the bins this packer
opened, in opening order. That lets composite algorithms run several
strategies over disjoint bin collections of one packing.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .model import Decision, Packing, RunResult


class OnlineAlgorithm:
    name = "online"
    tape = None

    def __init__(self, packing: Packing | None = None):
        self.packing = Packing() if packing is None else packing
        self.bins: list[int] = []
        self.flags: set[str] = set()

    def pack(self, index: int, size: Fraction) -> int:
        """Irrevocably place item ``index``; return the bin used."""
        raise NotImplementedError

    def open(self, index: int, size: Fraction) -> int:
        b = self.packing.place(None, index, size)
        self.bins.append(b)
        return b

    @property
    def advice_bits_read(self) -> int:
        return self.tape.accessed if self.tape is not None else 0


def first_fit_bin(packing: Packing, bins: Iterable[int], size: Fraction,
                  level: Callable[[int], Fraction] | None = None) -> int | None:
    """First bin of ``bins`` whose level (actual load by default) admits ``size``."""
    for b in bins:
        current = packing.bins[b].load if level is None else level(b)
        if current + size <= 1:
            return b
    return None


def best_fit_bin(packing: Packing, bins: Iterable[int], size: Fraction) -> int | None:
    """Feasible bin with the smallest residual; ties go to the lowest bin index."""
    best = None
    for b in bins:
        load = packing.bins[b].load
        if load + size > 1:
            continue
        if best is None or load > packing.bins[best].load or (
                load == packing.bins[best].load and b < best):
            best = b
    return best


class NextFit(OnlineAlgorithm):
    name = "nf"

    def pack(self, index, size):
        if self.bins and self.packing.bins[self.bins[-1]].fits(size):
            return self.packing.place(self.bins[-1], index, size)
        return self.open(index, size)


class FirstFit(OnlineAlgorithm):
    name = "ff"

    def pack(self, index, size):
        b = first_fit_bin(self.packing, self.bins, size)
        if b is None:
            return self.open(index, size)
        return self.packing.place(b, index, size)


class BestFit(OnlineAlgorithm):
    name = "bf"

    def pack(self, index, size):
        b = best_fit_bin(self.packing, self.bins, size)
        if b is None:
            return self.open(index, size)
        return self.packing.place(b, index, size)


def harmonic_type(size: Fraction, k: int) -> int:
    """Type i for sizes in (1/(i+1), 1/i], capped at k for (0, 1/k]."""
    return min(size.denominator // size.numerator, k)


class Harmonic(OnlineAlgorithm):
    """Harmonic_K: Next-Fit run separately for each size type."""

    def __init__(self, k: int, packing: Packing | None = None):
        if k < 1:
            raise ValueError("Harmonic needs K >= 1")
        super().__init__(packing)
        self.k = k
        self.name = f"harmonic:{k}"
        self.classes: dict[int, NextFit] = {}

    def pack(self, index, size):
        t = harmonic_type(size, self.k)
        sub = self.classes.get(t)
        if sub is None:
            sub = self.classes[t] = NextFit(self.packing)
        before = len(sub.bins)
        b = sub.pack(index, size)
        if len(sub.bins) > before:
            self.bins.append(b)
        return b


def run_online(algorithm: OnlineAlgorithm, seq: Sequence[Fraction]) -> RunResult:
    """Feed ``seq`` one item at a time and record every decision."""
    packing = algorithm.packing
    trace = []
    for i, size in enumerate(seq):
        b = algorithm.pack(i, size)
        trace.append(Decision(b, len(packing.bins[b].items) == 1))
    return RunResult(packing, algorithm.advice_bits_read, trace, set(algorithm.flags))
