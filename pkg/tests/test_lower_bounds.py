from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from advicepack import BestFit, FirstFit, NextFit, opt_exact, verify_packing
from advicepack.errors import DomainError, InvalidLevels, InvalidParams, InvalidVector
from advicepack.lower_bounds import (GuessingFromSeparation, IndexVector,
                                     KnownPartitionSeparation, SeparationFromBinPacking,
                                     binpack_bound, binpack_coefficient,
                                     count_weighted_solutions, guessing_bound,
                                     guessing_bound_known_zeros, guessing_coefficient,
                                     index_family, index_family_member, index_family_packing,
                                     index_family_sequence, index_family_size, level_family,
                                     level_family_packing, level_family_sequence,
                                     levels_from_bins, reduce_with_known_partition,
                                     reduce_with_packer, weighted_solutions_bound)
from advicepack.lower_bounds.reduction import LARGE, SMALL, default_shift
from advicepack.oracle import opt_configurations
from advicepack.tape import self_delimited_length

# -- index family -----------------------------------------------------------

def test_index_family_fillers():
    seq = index_family_sequence(IndexVector(8, 3, (1, 2, 3, 2, 1)))
    assert seq[:5] == (F(1, 4), F(1, 8), F(1, 16), F(1, 32), F(1, 64))
    assert seq[5:] == (F(47, 64), F(27, 32), F(15, 16))
    assert [float(u) for u in seq[5:]] == [0.734375, 0.84375, 0.9375]


def test_index_family_size():
    assert index_family_size(8, 3) == 9
    vectors = list(index_family(8, 3))
    assert len(vectors) == 9 == len(set(vectors))
    assert [index_family_member(8, 3, i) for i in range(9)] == vectors


@pytest.mark.parametrize("n, k, v", [
    (8, 3, (1, 2, 3, 2)), (8, 3, (2, 1, 3, 2, 1)), (8, 3, (1, 2, 3, 4, 1)), (5, 3, (1, 2))])
def test_index_vector_validation(n, k, v):
    with pytest.raises(InvalidVector):
        IndexVector(n, k, v)


def test_index_member_out_of_range():
    with pytest.raises(InvalidVector):
        index_family_member(8, 3, 9)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(1, n // 2))).flatmap(
    lambda nk: st.tuples(st.just(nk[0]), st.just(nk[1]),
                         st.integers(0, index_family_size(*nk) - 1))))
def test_index_family_packings_are_full(args):
    n, k, index = args
    vec = index_family_member(n, k, index)
    seq = index_family_sequence(vec)
    packing = index_family_packing(vec)
    assert len(seq) == n
    assert verify_packing(seq, packing) and packing.cost == k
    assert all(b.load == 1 for b in packing.bins)
    assert opt_exact(seq)[0] == k


# -- level family -----------------------------------------------------------

def test_level_family_sample_instances():
    levels = levels_from_bins((1, 1, 1, 1, 2, 2, 3, 4), 6)
    assert levels == (4, 2, 1, 1)
    seq = level_family_sequence(30, 6, levels)
    assert seq == ((F(1, 12),) * 15 + (F(11, 12),) * 4 + (F(10, 12),) * 2
                   + (F(9, 12), F(8, 12)) + (F(1),) * 7)
    packing = level_family_packing(30, 6, levels)
    assert verify_packing(seq, packing) and packing.cost == 15

    seq = level_family_sequence(30, 6, (7, 0, 0, 2))
    assert seq == (F(1, 12),) * 15 + (F(11, 12),) * 7 + (F(8, 12),) * 2 + (F(1),) * 6
    assert opt_configurations({x: seq.count(x) for x in set(seq)})[0] == 15


def test_level_family_degenerate():
    seq = level_family_sequence(10, 4, (5, 0))
    assert F(1) not in seq and len(seq) == 10


@pytest.mark.parametrize("n, m, levels", [
    (9, 6, (4, 2, 1, 1)), (30, 2, ()), (30, 6, (4, 2, 1)), (30, 6, (4, 2, 1, 2)),
    (30, 6, (-1, 2, 1, 3))])
def test_level_validation(n, m, levels):
    with pytest.raises(InvalidLevels):
        level_family_sequence(n, m, levels)


def test_level_family_enumeration():
    members = list(level_family(12, 5))
    assert len(members) == count_weighted_solutions(3, 6)
    for levels in members:
        seq = level_family_sequence(12, 5, levels)
        assert len(seq) == 12
        assert verify_packing(seq, level_family_packing(12, 5, levels))


# -- counting ---------------------------------------------------------------

@pytest.mark.parametrize("alpha, x, count, bound", [(2, 6, 4, 3), (1, 5, 1, 1), (3, 6, 7, 4)])
def test_counting_examples(alpha, x, count, bound):
    assert count_weighted_solutions(alpha, x) == count
    assert weighted_solutions_bound(alpha, x) == bound


def test_counting_against_generating_function():
    # coefficient of t^X in prod 1/(1 - t^i)
    for alpha in range(1, 6):
        coeffs = [1] + [0] * 40
        for i in range(1, alpha + 1):
            for x in range(i, 41):
                coeffs[x] += coeffs[x - i]
        assert [count_weighted_solutions(alpha, x) for x in range(41)] == coeffs


def test_counting_domain():
    with pytest.raises(DomainError):
        count_weighted_solutions(0, 3)
    with pytest.raises(DomainError):
        weighted_solutions_bound(2, -1)
    with pytest.raises(DomainError):
        count_weighted_solutions(30, 10**6)


# -- bounds -----------------------------------------------------------------

def test_binpack_coefficient():
    assert binpack_coefficient(F(9, 8)) == 0
    assert binpack_coefficient(F(17, 16)) == pytest.approx(0.18872, abs=1e-4)
    for bad in (1, F(5, 4)):
        with pytest.raises(DomainError):
            binpack_coefficient(bad)


def test_guessing_bounds():
    assert guessing_coefficient(F(1, 2)) == 0
    assert guessing_bound(F(3, 4), 1000) == pytest.approx(188.72, abs=0.01)
    assert guessing_bound_known_zeros(F(3, 4), 1000) == pytest.approx(
        guessing_bound(F(3, 4), 1000) - self_delimited_length(1000))
    with pytest.raises(DomainError):
        guessing_coefficient(1)


def test_binpack_bound_composes_guessing_bound():
    c = F(17, 16)
    alpha = 5 - 4 * c
    n = 4000
    assert binpack_coefficient(c) == pytest.approx(guessing_coefficient(alpha))
    assert binpack_bound(c, n) == pytest.approx(guessing_bound_known_zeros(alpha, n) / 2)


@given(st.fractions(F(1, 2), F(99, 100)))
def test_guessing_coefficient_in_unit_interval(alpha):
    assert 0 <= guessing_coefficient(alpha) < 1


# -- reduction --------------------------------------------------------------

def test_shift_is_decreasing_and_in_range():
    f = default_shift(F(1, 100), F(1, 10))
    values = [F(k, 16) for k in range(1, 16)]
    shifts = [f(v) for v in values]
    assert all(a > b for a, b in zip(shifts, shifts[1:]))
    assert all(F(1, 100) < s < F(1, 10) for s in shifts)
    items = [F(1, 2) - s for s in shifts]
    assert items == sorted(items)


@pytest.mark.parametrize("lo, hi", [(0, F(1, 10)), (F(1, 10), F(1, 100)), (F(1, 100), F(1, 6))])
def test_separation_parameters(lo, hi):
    with pytest.raises(InvalidParams):
        SeparationFromBinPacking(BestFit(), 1, 1, lo, hi)


def test_guessing_trace_for_01():
    solver = KnownPartitionSeparation([LARGE, SMALL])
    g = GuessingFromSeparation(solver)
    g.guess(); g.reveal(0)
    g.guess(); g.reveal(1)
    assert [s.probe for s in g.steps] == [F(1, 2), F(1, 4)]
    assert [s.class_guess for s in g.steps] == [LARGE, SMALL]
    assert g.steps[0].large_after == F(1, 2)
    assert g.mistakes == 0


@given(st.lists(st.integers(0, 1), max_size=60))
def test_cheating_separation_never_errs(bits):
    assert reduce_with_known_partition(bits).mistakes == 0


@pytest.mark.parametrize("inner", [BestFit, FirstFit, NextFit])
@settings(max_examples=60, deadline=None)
@given(bits=st.lists(st.integers(0, 1), max_size=60))
def test_reduction_mistakes_bounded_by_extra_bins(inner, bits):
    chain = reduce_with_packer(bits, inner)
    trace = chain.separation
    assert len(trace.items) == 2 * len(bits)
    assert verify_packing(trace.items, trace.witness)
    assert trace.witness.cost == len(bits)
    assert sum(1 for x in trace.items if x > F(1, 2)) == len(bits)
    assert verify_packing(trace.items, trace.packing)
    assert chain.mistakes == trace.mistakes <= 4 * trace.extra_bins


def test_reduction_alternating_bits():
    chain = reduce_with_packer([0, 1] * 10, BestFit)
    trace = chain.separation
    assert trace.mistakes <= 4 * trace.extra_bins


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 1), max_size=8))
def test_reduction_instance_optimum(bits):
    trace = reduce_with_packer(bits, BestFit).separation
    assert opt_exact(trace.items)[0] == len(bits)


def test_probe_sizes_follow_binary_search():
    chain = reduce_with_packer([1, 0, 1, 1, 0], BestFit)
    for step in chain.guesses:
        assert step.small_after < step.large_after
    zeros = [s.probe for s in chain.guesses if s.actual_bit == 0]
    ones = [s.probe for s in chain.guesses if s.actual_bit == 1]
    assert max(ones) < min(zeros)
