"""Exact-arithmetic domain types: item sizes, bins, packings, run results.

Sizes are :class:`fractions.Fraction` everywhere. Bin capacity is exactly 1.
Item identity is the item's position in its request sequence, so repeated
sizes are still distinct items.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidSize, OverflowRejected

ONE = Fraction(1)


def parse_size(value) -> Fraction:
    """Convert ``"p/q"``, a decimal string, an int or a Fraction to an exact size.

    Floats are rejected: ``0.1`` has no exact binary value and silently
    rounding it would defeat the point of exact arithmetic.
    """
    if isinstance(value, float):
        raise InvalidSize(f"float {value!r} is not exact; pass a string or Fraction")
    try:
        size = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidSize(f"cannot parse size {value!r}") from exc
    if not 0 < size <= 1:
        raise InvalidSize(f"item size {size} outside (0, 1]")
    return size


def as_sequence(items: Iterable) -> tuple[Fraction, ...]:
    """Validate and freeze a request sequence."""
    return tuple(parse_size(x) for x in items)


def format_size(size: Fraction) -> str:
    return f"{size.numerator}/{size.denominator}"


@dataclass
class Bin:
    items: list[int] = field(default_factory=list)
    load: Fraction = Fraction(0)

    @property
    def residual(self) -> Fraction:
        return ONE - self.load

    def fits(self, size: Fraction) -> bool:
        return self.load + size <= ONE


class Packing:
    """Assignment of item indices to bins, built up one placement at a time.

    Bins may be opened empty (reserved bins); only non-empty bins count
    toward :attr:`cost`.
    """

    def __init__(self):
        self.bins: list[Bin] = []
        self.assignment: dict[int, int] = {}

    def __len__(self):
        return len(self.bins)

    def __repr__(self):
        return f"Packing({self.groups()!r})"

    def __eq__(self, other):
        if not isinstance(other, Packing):
            return NotImplemented
        return self.groups() == other.groups()

    @property
    def cost(self) -> int:
        return sum(1 for b in self.bins if b.items)

    def open_bin(self) -> int:
        self.bins.append(Bin())
        return len(self.bins) - 1

    def place(self, target: int | None, index: int, size: Fraction) -> int:
        """Put item ``index`` of size ``size`` into bin ``target``.

        ``target=None`` opens a new bin. Returns the bin index used.
        Raises :class:`OverflowRejected` rather than ever exceeding capacity.
        """
        if index in self.assignment:
            raise ValueError(f"item {index} already placed in bin {self.assignment[index]}")
        if target is None:
            target = self.open_bin()
        b = self.bins[target]
        if b.load + size > ONE:
            raise OverflowRejected(target, b.load, size)
        b.items.append(index)
        b.load += size
        self.assignment[index] = target
        return target

    def groups(self) -> list[list[int]]:
        """Item indices of every non-empty bin, in bin order."""
        return [list(b.items) for b in self.bins if b.items]

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Bin-order-free form: bins sorted by their smallest item index."""
        return tuple(sorted(tuple(sorted(g)) for g in self.groups()))

    @classmethod
    def from_groups(cls, groups: Iterable[Iterable[int]], sizes: Sequence[Fraction]) -> "Packing":
        """Build a packing without capacity checks (for verifying external witnesses)."""
        packing = cls()
        for group in groups:
            b = Bin()
            for i in group:
                b.items.append(i)
                if 0 <= i < len(sizes):
                    b.load += sizes[i]
                packing.assignment.setdefault(i, len(packing.bins))
            packing.bins.append(b)
        return packing


@dataclass
class Verification:
    ok: bool
    problems: list[str]

    def __bool__(self):
        return self.ok


def verify_packing(seq: Sequence[Fraction], packing: Packing) -> Verification:
    """Check every item is packed exactly once and no bin exceeds capacity.

    Loads are recomputed from the sequence, not trusted from the packing.
    """
    problems = []
    seen: dict[int, int] = {}
    n = len(seq)
    for bi, b in enumerate(packing.bins):
        load = Fraction(0)
        for i in b.items:
            if not 0 <= i < n:
                problems.append(f"bin {bi}: item index {i} out of range")
                continue
            if i in seen:
                problems.append(f"item {i} packed in bins {seen[i]} and {bi}")
            seen[i] = bi
            load += seq[i]
        if load > ONE:
            problems.append(f"bin {bi}: load {load} exceeds 1")
    for i in range(n):
        if i not in seen:
            problems.append(f"item {i} unassigned")
    return Verification(not problems, problems)


@dataclass(frozen=True)
class Decision:
    bin: int
    new_bin: bool


@dataclass
class RunResult:
    packing: Packing
    advice_bits_read: int
    trace: list[Decision]
    flags: set[str] = field(default_factory=set)

    @property
    def cost(self) -> int:
        return self.packing.cost


def replay(seq: Sequence[Fraction], trace: Sequence[Decision]) -> Packing:
    """Rebuild the packing a run produced from its decision trace alone."""
    packing = Packing()
    for i, (size, d) in enumerate(zip(seq, trace)):
        while len(packing.bins) <= d.bin:
            packing.open_bin()
        packing.place(d.bin, i, size)
    return packing


# Instance files: {"n": 3, "items": ["1/2", "0.25", "1"]}

def instance_to_json(seq: Sequence[Fraction]) -> dict:
    return {"n": len(seq), "items": [format_size(x) for x in seq]}


def instance_from_json(data: dict) -> tuple[Fraction, ...]:
    seq = as_sequence(data["items"])
    if "n" in data and data["n"] != len(seq):
        raise InvalidSize(f"instance declares n={data['n']} but lists {len(seq)} items")
    return seq


def load_instance(path) -> tuple[Fraction, ...]:
    return instance_from_json(json.loads(Path(path).read_text()))


def save_instance(path, seq: Sequence[Fraction]) -> None:
    Path(path).write_text(json.dumps(instance_to_json(seq)) + "\n")
