import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from advicepack import AdviceTape, Packing, opt_exact, run_online, verify_packing
from advicepack.advice import (ADVICE_INCONSISTENT, DistinctReplay, FourThirds, FullIndex,
                               HarmonicType3, PairPacker, ThreeHalves, four_thirds_oracle,
                               frequency_oracle, full_index_oracle, harmonic_type3,
                               harmonic_weight, header_length, is_good_bin,
                               pair_packer_oracle, perfect_pairing, size_class,
                               three_halves_oracle)
from advicepack.advice.four_thirds import Params
from advicepack.errors import InvalidParams, NoFeasibleBin, OutOfRange, UnknownSize
from advicepack.tape import self_delimited_length

from conftest import sequences

INDEX_EXAMPLE = (F(1, 4), F(1, 8), F(1, 16), F(1, 32), F(1, 64),
                 F(47, 64), F(27, 32), F(15, 16))
LEVEL_EXAMPLE = ((F(1, 12),) * 15 + (F(11, 12),) * 4 + (F(10, 12),) * 2
                 + (F(9, 12), F(8, 12)) + (F(1),) * 7)


def full_index(seq):
    tape = AdviceTape(full_index_oracle(seq))
    return run_online(FullIndex(tape, len(seq)), seq)


def three_halves(seq):
    return run_online(ThreeHalves(AdviceTape(three_halves_oracle(seq))), seq)


def four_thirds(seq, eps=F(1, 12)):
    return run_online(FourThirds(AdviceTape(four_thirds_oracle(seq, eps)), eps), seq)


def pairs(seq, bits=None):
    bits = bits if bits is not None else pair_packer_oracle(seq)
    return run_online(PairPacker(AdviceTape(bits)), seq)


# -- full index -------------------------------------------------------------

def test_full_index_on_unique_instance():
    bits = full_index_oracle(INDEX_EXAMPLE)
    assert bits.startswith("110") and len(bits) == 3 + 6 * 2
    result = full_index(INDEX_EXAMPLE)
    assert result.cost == 3 and result.advice_bits_read == 15 <= 8 * 2


def test_full_index_single_bin():
    assert full_index_oracle((F(1, 2), F(1, 2))) == "0"
    result = full_index((F(1, 2), F(1, 2)))
    assert result.cost == 1 and result.advice_bits_read == 1


def test_full_index_empty():
    result = full_index(())
    assert result.cost == 0 and result.advice_bits_read == 1


@settings(max_examples=150, deadline=None)
@given(sequences(max_n=12))
def test_full_index_is_optimal(seq):
    result = full_index(seq)
    assert verify_packing(seq, result.packing)
    assert result.cost == opt_exact(seq)[0]
    assert not result.flags


def test_full_index_flags_corrupted_advice():
    seq = (F(3, 4), F(3, 4), F(1, 8), F(1, 8))
    # header says 1-bit indices; both large items sent to slot 0
    result = run_online(FullIndex(AdviceTape("10" + "00"), 4), seq)
    assert ADVICE_INCONSISTENT in result.flags
    assert verify_packing(seq, result.packing)


# -- distinct replay --------------------------------------------------------

def test_distinct_replay_examples():
    seq = (F(2, 3), F(1, 3), F(1, 3), F(2, 3))
    universe = [F(2, 3), F(1, 3)]
    bits = frequency_oracle(seq, universe)
    # field width ceil(log(4+1)) = 3, self-delimited, then the counts (2, 2)
    assert bits == "110" + "10" + "11" + "010" + "010"
    result = run_online(DistinctReplay(AdviceTape(bits), universe), seq)
    assert result.cost == 2 and result.advice_bits_read == len(bits)

    halves = (F(1, 2),) * 4
    tape = AdviceTape(frequency_oracle(halves, [F(1, 2)]))
    assert run_online(DistinctReplay(tape, [F(1, 2)]), halves).cost == 2


def test_distinct_replay_level_instance():
    universe = sorted(set(LEVEL_EXAMPLE))
    tape = AdviceTape(frequency_oracle(LEVEL_EXAMPLE, universe))
    result = run_online(DistinctReplay(tape, universe), LEVEL_EXAMPLE)
    assert result.cost == 15 and verify_packing(LEVEL_EXAMPLE, result.packing)


def test_distinct_replay_rejects_unknown_size():
    with pytest.raises(UnknownSize):
        frequency_oracle((F(1, 2), F(1, 3)), [F(1, 2)])
    algo = DistinctReplay(AdviceTape(frequency_oracle((F(1, 2),), [F(1, 2)])), [F(1, 2)])
    with pytest.raises(UnknownSize):
        algo.pack(0, F(1, 3))


def test_distinct_replay_flags_wrong_counts():
    universe = [F(1, 2)]
    tape = AdviceTape(frequency_oracle((F(1, 2),) * 2, universe))
    result = run_online(DistinctReplay(tape, universe), (F(1, 2),) * 3)
    assert ADVICE_INCONSISTENT in result.flags
    assert verify_packing((F(1, 2),) * 3, result.packing)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 24), min_size=1, max_size=4, unique=True),
       st.lists(st.integers(0, 3), min_size=1, max_size=12))
def test_distinct_replay_is_optimal(nums, picks):
    universe = [F(k, 24) for k in nums]
    seq = tuple(universe[p % len(universe)] for p in picks)
    tape = AdviceTape(frequency_oracle(seq, universe))
    result = run_online(DistinctReplay(tape, universe), seq)
    assert verify_packing(seq, result.packing)
    assert result.cost == opt_exact(seq)[0]


# -- three halves -----------------------------------------------------------

@pytest.mark.parametrize("x, cls", [
    (F(1, 3), "tiny"), (F(1, 2), "small"), (F(2, 3), "medium"), (F(7, 10), "large"),
    (F(11, 20), "medium"), (F(3, 10), "tiny")])
def test_size_class(x, cls):
    assert size_class(x) == cls


def test_three_halves_examples():
    seq = (F(11, 20), F(3, 10), F(7, 10))
    result = three_halves(seq)
    assert result.packing.groups() == [[0, 1], [2]]
    assert result.cost == 2 == opt_exact(seq)[0]
    for k in range(1, 6):
        assert three_halves((F(3, 5),) * k).cost == k
    assert three_halves(()).cost == 0


def test_three_halves_advice_length():
    for n in (0, 1, 2, 7, 8, 100):
        w = n.bit_length()
        assert len(three_halves_oracle((F(1, 2),) * n)) == w + self_delimited_length(w)


def test_three_halves_wrong_count_is_flagged():
    tape = AdviceTape(three_halves_oracle((F(1, 4),) * 2))
    result = run_online(ThreeHalves(tape), (F(3, 5), F(3, 5)))
    assert ADVICE_INCONSISTENT in result.flags
    assert result.cost == 2


@settings(max_examples=150, deadline=None)
@given(sequences(max_n=14))
def test_three_halves_guarantee_and_invariants(seq):
    algo = ThreeHalves(AdviceTape(three_halves_oracle(seq)))
    for i, x in enumerate(seq):
        algo.pack(i, x)
        assert algo.invariant_violations() == []
    assert verify_packing(seq, algo.packing)
    assert 2 * algo.packing.cost <= 3 * opt_exact(seq)[0] + 6
    assert algo.unmatched == 0 and not algo.flags


# -- pairs and harmonic -----------------------------------------------------

def test_pair_packer_examples():
    seq = (F(3, 5), F(7, 10), F(2, 5), F(3, 10))
    assert pair_packer_oracle(seq) == "0011"
    assert pairs(seq).cost == 2
    seq = (F(1, 2), F(3, 5), F(2, 5), F(1, 2))
    result = pairs(seq, "0011")
    assert result.packing.groups() == [[0, 3], [1, 2]]
    assert pairs((F(1, 2), F(1, 2)), "01").cost == 1


def test_pair_packer_strict_failure():
    with pytest.raises(NoFeasibleBin):
        pairs((F(3, 5), F(3, 5)), "01")


def test_pair_packer_lenient_failure_is_flagged():
    algo = PairPacker(AdviceTape("01"), strict=False)
    result = run_online(algo, (F(3, 5), F(3, 5)))
    assert ADVICE_INCONSISTENT in result.flags and result.cost == 2


def test_pair_oracle_certifies_optimality():
    # a pairing exists but three items share one bin in every optimum
    with pytest.raises(InvalidParams):
        pair_packer_oracle((F(1, 3),) * 3 + (F(1, 3),) * 3)
    with pytest.raises(InvalidParams):
        pair_packer_oracle((F(3, 5), F(3, 5)))


def test_perfect_pairing():
    assert perfect_pairing((F(3, 5), F(7, 10), F(2, 5), F(3, 10))) == [(0, 2), (1, 3)]
    assert perfect_pairing((F(1, 2),)) is None


def test_harmonic_weights():
    assert harmonic_weight(F(13, 50)) == F(1, 3)
    assert harmonic_weight(F(7, 20)) == F(1, 2)
    for bad in (F(1, 4), F(51, 100)):
        with pytest.raises(OutOfRange):
            harmonic_weight(bad)


def test_harmonic_type3_examples():
    for k in range(1, 6):
        seq = (F(2, 5), F(3, 10), F(3, 10)) * k
        result = harmonic_type3(seq)
        assert 3 * result.cost <= 4 * k + 9
        assert sum(map(harmonic_weight, seq)) == F(7, 6) * k
    assert harmonic_type3((F(3, 10),)).cost == 1


def test_harmonic_type3_range():
    with pytest.raises(OutOfRange):
        harmonic_type3((F(1, 5),))
    lenient = run_online(HarmonicType3(strict=False), (F(1, 5), F(1, 5)))
    assert lenient.cost == 1


# -- four thirds ------------------------------------------------------------

def test_params():
    p = Params(F(1, 12))
    assert p.eps1 == F(11, 720) and p.tiny == F(11, 144) and p.grid == 66
    for bad in (0, F(1, 11), F(1, 5)):
        with pytest.raises(InvalidParams):
            Params(bad)


def test_good_bins():
    p = Params(F(1, 12))
    assert not is_good_bin([F(7, 10), F(3, 10)], p)
    assert is_good_bin([F(1, 2), F(3, 10), F(1, 5)], p)


def test_four_thirds_examples():
    seq = (F(7, 10), F(3, 10))
    bits = four_thirds_oracle(seq, F(1, 12))
    assert bits.endswith("1011")
    result = four_thirds(seq)
    assert result.cost == 1

    seq = (F(1, 2), F(3, 10), F(1, 5)) * 2
    witness = Packing.from_groups([[0, 1, 2], [3, 4, 5]], seq)
    bits = four_thirds_oracle(seq, F(1, 12), witness)
    assert bits.endswith("00" * 6)
    result = run_online(FourThirds(AdviceTape(bits), F(1, 12)), seq)
    assert 3 * result.cost <= 4 * 2 + 9 and not result.flags

    assert four_thirds(()).cost == 0


def test_four_thirds_tape_accounting():
    seq = (F(1, 2), F(3, 10), F(1, 5), F(7, 10), F(3, 10))
    result = four_thirds(seq)
    assert result.advice_bits_read == header_length(len(seq), F(1, 12)) + 2 * len(seq)


@settings(max_examples=100, deadline=None)
@given(sequences(max_n=12, max_den=60))
def test_four_thirds_guarantee(seq):
    eps = F(1, 12)
    result = four_thirds(seq, eps)
    assert verify_packing(seq, result.packing)
    assert result.cost <= (F(4, 3) + eps) * opt_exact(seq)[0] + 3
    assert not result.flags


# -- shared -----------------------------------------------------------------

@pytest.mark.parametrize("build", [
    lambda seq: FullIndex(AdviceTape(full_index_oracle(seq)), len(seq)),
    lambda seq: ThreeHalves(AdviceTape(three_halves_oracle(seq))),
    lambda seq: FourThirds(AdviceTape(four_thirds_oracle(seq, F(1, 12))), F(1, 12)),
])
def test_advice_runs_are_deterministic(build):
    rng = random.Random(3)
    for _ in range(20):
        seq = tuple(F(rng.randint(1, 64), 64) for _ in range(rng.randint(0, 10)))
        a, b = run_online(build(seq), seq), run_online(build(seq), seq)
        assert a.trace == b.trace and a.advice_bits_read == b.advice_bits_read
