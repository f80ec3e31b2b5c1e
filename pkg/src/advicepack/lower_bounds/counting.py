"""Solutions of x_1 + 2 x_2 + ... + a x_a = X over the non-negative integers."""
from __future__ import annotations

from fractions import Fraction
from math import prod

from ..errors import DomainError

MAX_STATES = 10 ** 7


def count_weighted_solutions(alpha: int, total: int) -> int:
    """Brute-force count: enumerate x_alpha..x_2, x_1 is then forced."""
    if alpha < 1 or total < 0:
        raise DomainError(f"need alpha >= 1 and X >= 0 (alpha={alpha}, X={total})")
    if prod(total // i + 1 for i in range(2, alpha + 1)) > MAX_STATES:
        raise DomainError(f"enumeration for alpha={alpha}, X={total} is too large")

    def rec(i, remaining):
        if i == 1:
            return 1
        return sum(rec(i - 1, remaining - i * x) for x in range(remaining // i + 1))

    return rec(alpha, total)


def weighted_solutions_bound(alpha: int, total: int) -> Fraction:
    """(1 + 2X / (alpha (alpha + 1)))^(alpha - 1), exactly."""
    if alpha < 1 or total < 0:
        raise DomainError(f"need alpha >= 1 and X >= 0 (alpha={alpha}, X={total})")
    return (1 + Fraction(2 * total, alpha * (alpha + 1))) ** (alpha - 1)
