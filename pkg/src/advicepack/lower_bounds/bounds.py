"""Closed-form advice lower bounds (the only floating-point code in the package).

Entropy terms use the convention 0 * log 0 = 0; logarithms are base 2.
"""
from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DomainError
from ..tape import self_delimited_length


def xlog2x(x) -> float:
    x = float(x)
    return 0.0 if x == 0 else x * math.log2(x)


def guessing_coefficient(alpha) -> float:
    """1 + (1 - a) log(1 - a) + a log a, for a in [1/2, 1)."""
    alpha = Fraction(alpha)
    if not Fraction(1, 2) <= alpha < 1:
        raise DomainError(f"alpha must lie in [1/2, 1), got {alpha}")
    return 1 + xlog2x(1 - alpha) + xlog2x(alpha)


def guessing_bound(alpha, n: int) -> float:
    """Advice bits needed to guess more than alpha*n bits of a binary string."""
    return guessing_coefficient(alpha) * n


def guessing_bound_known_zeros(alpha, n: int) -> float:
    """As :func:`guessing_bound` when the number of zeros is part of the input."""
    return guessing_bound(alpha, n) - self_delimited_length(n)


def binpack_coefficient(c) -> float:
    """1 + (4c - 4) log(4c - 4) + (5 - 4c) log(5 - 4c), for c in (1, 9/8]."""
    c = Fraction(c)
    if not 1 < c <= Fraction(9, 8):
        raise DomainError(f"competitive ratio must lie in (1, 9/8], got {c}")
    return 1 + xlog2x(4 * c - 4) + xlog2x(5 - 4 * c)


def binpack_bound(c, n: int) -> float:
    """Advice bits any c-competitive algorithm needs on length-n sequences."""
    return (n * binpack_coefficient(c) - self_delimited_length(n)) / 2
