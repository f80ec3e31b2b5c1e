"""Instance generators and the algorithm-matrix experiment runner."""
from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Callable, Sequence

from .advice.four_thirds import Params
from .advice import (DistinctReplay, FourThirds, FullIndex, HarmonicType3, PairPacker,
                     ThreeHalves, four_thirds_oracle, frequency_oracle, full_index_oracle,
                     pair_packer_oracle, three_halves_oracle)
from .baselines import BestFit, FirstFit, Harmonic, NextFit, OnlineAlgorithm, run_online
from .errors import AdvicePackError, BadParams, BudgetExhausted
from .lower_bounds import (index_family_member, index_family_sequence, index_family_size,
                           level_family_sequence, reduce_with_packer)
from .model import RunResult, load_instance, verify_packing
from .oracle import DEFAULT_BUDGET, opt_exact
from .tape import AdviceTape, tape_from_hex

SEED_ENV = "ADVICEPACK_SEED"
DEFAULT_DENOMINATOR = 64


def resolve_seed(seed: int) -> int:
    """The ``ADVICEPACK_SEED`` environment variable, when set, wins over ``seed``."""
    override = os.environ.get(SEED_ENV)
    return int(override) if override not in (None, "") else seed


# -- generators -------------------------------------------------------------

def gen_uniform(rng: random.Random, n: int, D: int = DEFAULT_DENOMINATOR):
    return tuple(Fraction(rng.randint(1, D), D) for _ in range(n))


def gen_pairs(rng: random.Random, n: int, D: int = 120, slack: int = 6):
    """n/2 pairs (x, 1 - x - s), every item above 1/3: OPT is exactly n/2."""
    if n % 2:
        raise BadParams("pairs needs an even n")
    if D % 3:
        raise BadParams("pairs needs D divisible by 3")
    items = []
    for _ in range(n // 2):
        k = rng.randint(D // 3 + 1, 2 * D // 3 - 1)
        s = rng.randint(0, min(slack, 2 * D // 3 - k - 1))
        items += [Fraction(k, D), Fraction(D - k - s, D)]
    rng.shuffle(items)
    return tuple(items)


def gen_triples(rng: random.Random, n: int, D: int = 120):
    """n/3 triples from (1/4, 1/2] that fit in one bin: OPT is exactly n/3."""
    if n % 3:
        raise BadParams("triples needs n divisible by 3")
    if D % 4:
        raise BadParams("triples needs D divisible by 4")
    lo = D // 4 + 1
    items = []
    for _ in range(n // 3):
        a = rng.randint(lo, min(D // 2, D - 2 * lo))
        b = rng.randint(lo, min(D // 2, D - a - lo))
        c = rng.randint(lo, min(D // 2, D - a - b))
        items += [Fraction(a, D), Fraction(b, D), Fraction(c, D)]
    rng.shuffle(items)
    return tuple(items)


def gen_mixed(rng: random.Random, n: int, D: int = 120):
    """Bins drawn from pair, triple, lone-large and random-cut templates, shuffled.

    Random cuts usually leave some pieces below 1/4, pairs and triples never
    do, so optimal packings mix bins of both kinds.
    """
    items: list[Fraction] = []
    while len(items) < n:
        kind = rng.randrange(4)
        if kind == 0:
            items += gen_pairs(rng, 2, D)
        elif kind == 1:
            items += gen_triples(rng, 3, D)
        elif kind == 2:
            items.append(Fraction(rng.randint(D // 2 + 1, D), D))
        else:
            pieces = rng.randint(2, 4)
            fill = rng.randint(D - D // 10, D)
            cuts = sorted(rng.sample(range(1, fill), pieces - 1))
            bounds = [0] + cuts + [fill]
            items += [Fraction(b - a, D) for a, b in zip(bounds, bounds[1:])]
    items = items[:n]
    rng.shuffle(items)
    return tuple(items)


def gen_t1(rng: random.Random, n: int, k: int, index: int | None = None):
    if index is None:
        index = rng.randrange(index_family_size(n, k))
    return index_family_sequence(index_family_member(n, k, index))


def gen_t2(rng: random.Random, n: int, m: int, levels: Sequence[int]):
    return level_family_sequence(n, m, levels)


def gen_guessing_bits(rng: random.Random, n: int, inner: str = "bf"):
    """The bin packing instance the separation reduction builds for random bits."""
    bits = [rng.randrange(2) for _ in range(n)]
    chain = reduce_with_packer(bits, lambda: make_baseline(inner))
    return tuple(chain.separation.items)


GENERATORS: dict[str, Callable] = {
    "uniform": gen_uniform,
    "pairs": gen_pairs,
    "triples": gen_triples,
    "mixed": gen_mixed,
    "t1-family": gen_t1,
    "t2-family": gen_t2,
    "sgkh-bits": gen_guessing_bits,
}


def generate(kind: str, params: dict | None = None, seed: int = 0) -> tuple[Fraction, ...]:
    if kind not in GENERATORS:
        raise BadParams(f"unknown generator {kind!r}; choose from {sorted(GENERATORS)}")
    params = dict(params or {})
    try:
        return GENERATORS[kind](random.Random(seed), **params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {kind}: {exc}") from exc


def parse_generator(spec: str) -> tuple[str, dict]:
    """``"uniform:n=10,D=64"`` -> ("uniform", {"n": 10, "D": 64})."""
    kind, _, rest = spec.partition(":")
    params = {}
    for part in filter(None, rest.split(",")):
        key, _, value = part.partition("=")
        if "/" in value or ";" in value:
            params[key] = tuple(int(v) for v in value.replace("/", ";").split(";"))
        elif value.lstrip("-").isdigit():
            params[key] = int(value)
        else:
            params[key] = value
    return kind, params


# -- algorithm registry -----------------------------------------------------

def make_baseline(name: str) -> OnlineAlgorithm:
    if name == "nf":
        return NextFit()
    if name == "ff":
        return FirstFit()
    if name == "bf":
        return BestFit()
    if name.startswith("harmonic:"):
        return Harmonic(int(name.split(":", 1)[1]))
    raise BadParams(f"unknown baseline {name!r}")


@dataclass
class Contender:
    """An algorithm as the harness sees it: optional oracle, builder, guarantee."""

    name: str
    build: Callable[[AdviceTape | None, Sequence[Fraction]], OnlineAlgorithm]
    oracle: Callable | None = None
    guarantee: Callable[[int, int, int], bool] | None = None


def contender(name: str) -> Contender:
    if name in ("nf", "ff", "bf") or name.startswith("harmonic:"):
        make_baseline(name)
        return Contender(name, lambda tape, seq: make_baseline(name))
    if name == "harmonic3":
        return Contender(name, lambda tape, seq: HarmonicType3(),
                         guarantee=lambda cost, opt, n: 3 * cost <= 4 * opt + 9)
    if name == "full-index":
        return Contender(name, lambda tape, seq: FullIndex(tape, len(seq)),
                         lambda seq, witness: full_index_oracle(seq, witness),
                         lambda cost, opt, n: cost == opt)
    if name == "distinct":
        return Contender(name, lambda tape, seq: DistinctReplay(tape, sorted(set(seq))),
                         lambda seq, witness: frequency_oracle(seq, sorted(set(seq))),
                         lambda cost, opt, n: cost == opt)
    if name == "three-halves":
        return Contender(name, lambda tape, seq: ThreeHalves(tape),
                         lambda seq, witness: three_halves_oracle(seq),
                         lambda cost, opt, n: 2 * cost <= 3 * opt + 6)
    if name == "pairs":
        return Contender(name, lambda tape, seq: PairPacker(tape),
                         lambda seq, witness: pair_packer_oracle(seq, certify=False),
                         lambda cost, opt, n: 2 * cost == n and 2 * opt == n)
    if name.startswith("four-thirds"):
        _, _, eps_text = name.partition(":")
        eps = Fraction(eps_text or "1/12")
        Params(eps)
        return Contender(name, lambda tape, seq: FourThirds(tape, eps),
                         lambda seq, witness: four_thirds_oracle(seq, eps, witness),
                         lambda cost, opt, n: cost <= (Fraction(4, 3) + eps) * opt + 3)
    raise BadParams(f"unknown algorithm {name!r}")


def run_algorithm(name: str, seq: Sequence[Fraction], witness=None,
                  tape_bits: str | None = None) -> tuple[RunResult, str | None]:
    """Run one algorithm on one instance; returns the result and the tape used."""
    c = contender(name)
    tape = None
    if c.oracle is not None:
        if tape_bits is None:
            if witness is None:
                _, witness = opt_exact(seq)
            tape_bits = c.oracle(seq, witness)
        tape = AdviceTape(tape_bits)
    algorithm = c.build(tape, seq)
    return run_online(algorithm, seq), tape_bits


# -- experiment matrix ------------------------------------------------------

@dataclass
class ExperimentConfig:
    algorithms: list[str]
    source: str = "uniform:n=10"
    seed: int = 0
    repetitions: int = 1
    budget: int = DEFAULT_BUDGET
    output: str | None = None
    format: str = "csv"
    timing: bool = False
    tapes: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_json(cls, data: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise BadParams(f"unknown config keys {sorted(unknown)}")
        return cls(**data)


@dataclass
class ReportRow:
    instance: str
    n: int
    opt: int | None
    algorithm: str
    cost: int | None
    ratio: str
    advice_bits: int | None
    flags: str
    runtime_ms: str
    error: str = ""


COLUMNS = [f.name for f in fields(ReportRow)]


def instances(config: ExperimentConfig) -> list[tuple[str, tuple[Fraction, ...]]]:
    if config.source.startswith("file:"):
        paths = config.source[5:].split(",")
        return [(os.path.basename(p), load_instance(p)) for p in paths]
    kind, params = parse_generator(config.source)
    seed = resolve_seed(config.seed)
    return [(f"{kind}-{seed}-{r:04d}", generate(kind, params, seed * 1_000_003 + r))
            for r in range(config.repetitions)]


def run_matrix(config: ExperimentConfig) -> list[ReportRow]:
    """Every algorithm on every instance; rows ordered by instance then algorithm."""
    rows = []
    for instance_id, seq in instances(config):
        certified = True
        try:
            opt, witness = opt_exact(seq, config.budget)
        except BudgetExhausted as exc:
            opt, witness, certified = None, exc.witness, False
        for name in sorted(config.algorithms):
            start = time.perf_counter()
            flags: list[str] = []
            try:
                tape = config.tapes.get(name)
                result, _ = run_algorithm(name, seq, witness,
                                          tape_from_hex(tape) if tape else None)
            except (AdvicePackError, ValueError) as exc:
                rows.append(ReportRow(instance_id, len(seq), opt, name, None, "", None,
                                      "", "", f"{type(exc).__name__}: {exc}"))
                continue
            elapsed = (time.perf_counter() - start) * 1000
            check = verify_packing(seq, result.packing)
            if not check:
                flags.append("invalid-packing")
            flags += sorted(result.flags)
            guarantee = contender(name).guarantee
            if certified and guarantee is not None and not guarantee(result.cost, opt, len(seq)):
                flags.append("violation")
            if not certified:
                flags.append("opt-uncertified")
            ratio = f"{result.cost / opt:.6f}" if certified and opt else ""
            rows.append(ReportRow(instance_id, len(seq), opt, name, result.cost, ratio,
                                  result.advice_bits_read, ";".join(flags),
                                  f"{elapsed:.3f}" if config.timing else ""))
    return rows


def rows_ok(rows: Sequence[ReportRow]) -> bool:
    return all(not r.error and "violation" not in r.flags.split(";")
               and "invalid-packing" not in r.flags.split(";") for r in rows)


def render(rows: Sequence[ReportRow], fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
    if fmt != "csv":
        raise BadParams(f"unknown report format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        writer.writerow(["" if v is None else v for v in (getattr(r, c) for c in COLUMNS)])
    return buf.getvalue()
