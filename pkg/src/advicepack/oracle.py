"""Exact offline optima: item-level branch and bound, and a configuration DP.

The two solvers share no code beyond the data types so they can be used to
cross-check each other.
"""
from __future__ import annotations

import math
import sys
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import BudgetExhausted, ConfigurationExplosion, LimitExceeded
from .model import Packing

DEFAULT_BUDGET = 2_000_000
MAX_CONFIGURATIONS = 100_000


def lower_bound(seq: Sequence[Fraction]) -> int:
    """max(ceil(total size), number of items above 1/2)."""
    total = sum(seq, Fraction(0))
    big = sum(1 for x in seq if x > Fraction(1, 2))
    return max(math.ceil(total), big)


def _first_fit_groups(seq, order):
    loads, groups = [], []
    for i in order:
        for b, load in enumerate(loads):
            if load + seq[i] <= 1:
                loads[b] += seq[i]
                groups[b].append(i)
                break
        else:
            loads.append(seq[i])
            groups.append([i])
    return groups


class _Search:
    """Depth-first search for a packing into at most ``limit`` bins.

    Items are taken in non-increasing size order. Symmetry breaking: an item
    tries each distinct bin load once and may open only the next new bin.
    An item that exactly completes a bin is placed there without branching.
    """

    def __init__(self, seq, order, budget):
        self.seq = seq
        self.order = order
        self.budget = budget
        self.nodes = 0
        self.smallest = seq[order[-1]]
        self.suffix = [Fraction(0)] * (len(order) + 1)
        for p in range(len(order) - 1, -1, -1):
            self.suffix[p] = self.suffix[p + 1] + seq[order[p]]

    def run(self, limit):
        self.limit = limit
        self.loads: list[Fraction] = []
        self.where = [0] * len(self.order)
        self.failed: set = set()
        return self._dfs(0)

    def _dfs(self, p):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        if p == len(self.order):
            return True
        key = (p, tuple(sorted(self.loads)))
        if key in self.failed:
            return False
        # Space that no remaining item can use is wasted for good.
        waste = sum((1 - l for l in self.loads if 1 - l < self.smallest), Fraction(0))
        free = self.limit - sum(self.loads, Fraction(0)) - waste
        if self.suffix[p] > free:
            self.failed.add(key)
            return False
        size = self.seq[self.order[p]]
        for b, load in enumerate(self.loads):
            if load + size == 1:
                return self._try(p, b, size) or self._fail(key)
        tried = set()
        for b, load in enumerate(self.loads):
            if load in tried or load + size > 1:
                continue
            tried.add(load)
            if self._try(p, b, size):
                return True
        if len(self.loads) < self.limit:
            self.loads.append(size)
            self.where[p] = len(self.loads) - 1
            if self._dfs(p + 1):
                return True
            self.loads.pop()
        return self._fail(key)

    def _try(self, p, b, size):
        self.loads[b] += size
        self.where[p] = b
        if self._dfs(p + 1):
            return True
        self.loads[b] -= size
        return False

    def _fail(self, key):
        self.failed.add(key)
        return False

    def groups(self):
        groups = [[] for _ in range(len(self.loads))]
        for p, b in enumerate(self.where):
            groups[b].append(self.order[p])
        return [sorted(g) for g in groups]


class _OutOfBudget(Exception):
    pass


def _to_packing(seq, groups) -> Packing:
    packing = Packing()
    for group in sorted(groups, key=min):
        b = packing.open_bin()
        for i in sorted(group):
            packing.place(b, i, seq[i])
    return packing


def opt_exact(seq: Sequence[Fraction], node_budget: int = DEFAULT_BUDGET) -> tuple[int, Packing]:
    """Minimum number of bins for ``seq`` and a witness packing.

    Raises :class:`BudgetExhausted` (carrying the best bounds and the best
    known packing) when more than ``node_budget`` search nodes are needed.
    """
    n = len(seq)
    if n == 0:
        return 0, Packing()
    order = sorted(range(n), key=lambda i: (-seq[i], i))
    best = _first_fit_groups(seq, order)
    lb = lower_bound(seq)
    if len(best) == lb:
        return lb, _to_packing(seq, best)
    search = _Search(seq, order, node_budget)
    for limit in range(lb, len(best)):
        try:
            found = search.run(limit)
        except _OutOfBudget:
            raise BudgetExhausted(limit, len(best), _to_packing(seq, best)) from None
        if found:
            return limit, _to_packing(seq, search.groups())
    return len(best), _to_packing(seq, best)


def opt_cost(seq: Sequence[Fraction], node_budget: int = DEFAULT_BUDGET) -> int:
    return opt_exact(seq, node_budget)[0]


def enumerate_optimal_packings(seq: Sequence[Fraction], limit: int = 1000,
                               node_budget: int = DEFAULT_BUDGET) -> list[Packing]:
    """Every optimal packing, up to the order of bins.

    Bins are canonically ordered by their smallest item index, which is what
    assigning items in index order to "an existing bin or the next new one"
    produces.
    """
    seq = list(seq)
    n = len(seq)
    opt, _ = opt_exact(seq, node_budget)
    suffix = [Fraction(0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + seq[i]
    found: list[list[list[int]]] = []
    groups: list[list[int]] = []
    loads: list[Fraction] = []

    def walk(i):
        if i == n:
            if len(groups) == opt:
                if len(found) >= limit:
                    raise LimitExceeded(f"more than {limit} optimal packings")
                found.append([list(g) for g in groups])
            return
        free = sum((1 - l for l in loads), Fraction(0)) + (opt - len(groups))
        if suffix[i] > free:
            return
        for b in range(len(groups)):
            if loads[b] + seq[i] <= 1:
                groups[b].append(i)
                loads[b] += seq[i]
                walk(i + 1)
                loads[b] -= seq[i]
                groups[b].pop()
        if len(groups) < opt:
            groups.append([i])
            loads.append(seq[i])
            walk(i + 1)
            loads.pop()
            groups.pop()

    walk(0)
    return [_to_packing(seq, g) for g in found]


# -- configuration solver -------------------------------------------------

def _configurations(sizes, bound):
    """All non-zero multiplicity vectors <= ``bound`` whose total size fits in a bin."""
    m = len(sizes)
    out = []
    vec = [0] * m

    def rec(j, room):
        if j == m:
            if any(vec):
                out.append(tuple(vec))
                if len(out) > MAX_CONFIGURATIONS:
                    raise ConfigurationExplosion(
                        f"more than {MAX_CONFIGURATIONS} feasible configurations")
            return
        top = min(bound[j], math.floor(room / sizes[j]))
        for k in range(top, -1, -1):
            vec[j] = k
            rec(j + 1, room - k * sizes[j])
        vec[j] = 0

    rec(0, Fraction(1))
    return out


def opt_configurations(size_counts: Mapping[Fraction, int]) -> tuple[int, list[tuple[Fraction, ...]]]:
    """Optimal bin count for a multiset given as ``{size: count}``.

    Dynamic programme over remaining-count vectors; each step removes one
    bin configuration that contains the largest remaining size and cannot
    take any further remaining item. Returns the cost and the bins, each as a
    non-increasing tuple of sizes.
    """
    items = sorted(((Fraction(s), c) for s, c in size_counts.items() if c > 0), reverse=True)
    if not items:
        return 0, []
    sizes = [s for s, _ in items]
    counts = tuple(c for _, c in items)
    configs = _configurations(sizes, counts)
    m = len(sizes)

    def fill_of(cfg):
        return sum((k * s for k, s in zip(cfg, sizes)), Fraction(0))

    fills = {cfg: fill_of(cfg) for cfg in configs}

    @lru_cache(maxsize=None)
    def solve(state):
        first = next((j for j in range(m) if state[j]), None)
        if first is None:
            return 0, None
        best = None
        for cfg in configs:
            if cfg[first] == 0 or any(k > r for k, r in zip(cfg, state)):
                continue
            room = 1 - fills[cfg]
            if any(state[j] > cfg[j] and sizes[j] <= room for j in range(m)):
                continue  # not maximal for this state
            rest = tuple(r - k for r, k in zip(state, cfg))
            cost = solve(rest)[0] + 1
            if best is None or cost < best[0]:
                best = (cost, cfg)
        return best

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * sum(counts) + 100))
    try:
        cost = solve(counts)[0]
        bins = []
        state = counts
        while any(state):
            cfg = solve(state)[1]
            bins.append(tuple(s for s, k in zip(sizes, cfg) for _ in range(k)))
            state = tuple(r - k for r, k in zip(state, cfg))
    finally:
        sys.setrecursionlimit(limit)
    return cost, bins


def configuration_packing(seq: Sequence[Fraction], bins: Sequence[Sequence[Fraction]]) -> Packing:
    """Realize a configuration solution as a packing of the concrete items of ``seq``."""
    pools: dict[Fraction, list[int]] = {}
    for i, x in enumerate(seq):
        pools.setdefault(x, []).append(i)
    for pool in pools.values():
        pool.reverse()
    groups = [[pools[s].pop() for s in b] for b in bins]
    return _to_packing(seq, groups)
