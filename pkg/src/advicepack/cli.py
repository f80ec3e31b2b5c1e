"""Command-line entry point: ``advicepack <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import AdvicePackError, BudgetExhausted
from .harness import (ExperimentConfig, generate, make_baseline, parse_generator, render,
                      resolve_seed, rows_ok, run_algorithm, run_matrix)
from .lower_bounds import (binpack_bound, binpack_coefficient, guessing_bound,
                           guessing_bound_known_zeros, guessing_coefficient,
                           index_family_member, index_family_sequence, index_family_size,
                           level_family_sequence, random_bits, reduce_with_known_partition,
                           reduce_with_packer)
from .model import Packing, instance_to_json, load_instance, verify_packing
from .oracle import DEFAULT_BUDGET, enumerate_optimal_packings, opt_exact
from .tape import tape_from_hex, tape_to_hex


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _instance_text(seq) -> str:
    return json.dumps(instance_to_json(seq)) + "\n"


def cmd_generate(args) -> int:
    kind, params = parse_generator(args.generator)
    seq = generate(kind, params, resolve_seed(args.seed))
    _emit(_instance_text(seq), args.output)
    return 0


def cmd_opt(args) -> int:
    seq = load_instance(args.instance)
    try:
        cost, packing = opt_exact(seq, args.budget)
    except BudgetExhausted as exc:
        print(json.dumps({"opt": None, "lower": exc.lower, "upper": exc.upper,
                          "bins": exc.witness.groups() if exc.witness else None}))
        return 1
    out = {"opt": cost, "bins": packing.groups()}
    if args.enumerate:
        out["optimal_packings"] = [list(map(list, p.canonical()))
                                   for p in enumerate_optimal_packings(seq, node_budget=args.budget)]
    print(json.dumps(out))
    return 0


def cmd_run(args) -> int:
    if args.config:
        config = ExperimentConfig.from_json(json.loads(Path(args.config).read_text()))
    else:
        config = ExperimentConfig(algorithms=args.algorithms.split(","), source=args.source,
                                  seed=args.seed, repetitions=args.repetitions,
                                  budget=args.budget, output=args.output,
                                  format=args.format, timing=args.timing)
    for item in args.tape or []:
        name, _, hex_tape = item.partition("=")
        config.tapes[name] = hex_tape
    rows = run_matrix(config)
    _emit(render(rows, config.format), config.output)
    return 0 if rows_ok(rows) else 1


def cmd_advice(args) -> int:
    seq = load_instance(args.instance)
    tape = tape_from_hex(args.tape) if args.tape else None
    result, bits = run_algorithm(args.algorithm, seq, tape_bits=tape)
    print(json.dumps({"tape": tape_to_hex(bits or ""), "cost": result.cost,
                      "advice_bits": result.advice_bits_read,
                      "flags": sorted(result.flags), "bins": result.packing.groups()}))
    return 0


def cmd_family(args) -> int:
    if args.family == "t1":
        if args.count:
            print(index_family_size(args.n, args.k))
            return 0
        seq = index_family_sequence(index_family_member(args.n, args.k, args.index))
    else:
        levels = [int(x) for x in args.levels.split(",")]
        seq = level_family_sequence(args.n, args.m, levels)
    _emit(_instance_text(seq), args.output)
    return 0


def cmd_reduce(args) -> int:
    if args.bits is not None:
        bits = [int(c) for c in args.bits]
    else:
        bits = random_bits(args.random, resolve_seed(args.seed))
    if args.inner == "cheat":
        chain = reduce_with_known_partition(bits)
        print(json.dumps({"n": len(bits), "mistakes": chain.mistakes}))
        return 0
    chain = reduce_with_packer(bits, lambda: make_baseline(args.inner))
    trace = chain.separation
    ok = bool(verify_packing(trace.items, trace.witness)) and trace.mistakes <= 4 * trace.extra_bins
    print(json.dumps({"n": len(bits), "items": len(trace.items), "opt": trace.opt,
                      "cost": trace.cost, "extra_bins": trace.extra_bins,
                      "mistakes": trace.mistakes, "ok": ok}))
    return 0 if ok else 1


def cmd_bound(args) -> int:
    value = Fraction(args.value)
    if args.kind == "guessing":
        out = {"coefficient": guessing_coefficient(value)}
        if args.n is not None:
            out["bits"] = guessing_bound(value, args.n)
            out["bits_known_zeros"] = guessing_bound_known_zeros(value, args.n)
    else:
        out = {"coefficient": binpack_coefficient(value)}
        if args.n is not None:
            out["bits"] = binpack_bound(value, args.n)
    print(json.dumps(out))
    return 0


def cmd_verify(args) -> int:
    seq = load_instance(args.instance)
    data = json.loads(Path(args.packing).read_text())
    groups = data["bins"] if isinstance(data, dict) else data
    check = verify_packing(seq, Packing.from_groups(groups, seq))
    print(json.dumps({"ok": check.ok, "cost": sum(1 for g in groups if g),
                      "problems": check.problems}))
    return 0 if check.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="advicepack",
                                     description="Online bin packing with advice.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate an instance, e.g. uniform:n=10,D=64")
    p.add_argument("generator")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("opt", help="exact optimum of an instance file")
    p.add_argument("instance")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--enumerate", action="store_true", help="list every optimal packing")
    p.set_defaults(func=cmd_opt)

    p = sub.add_parser("run", help="run an algorithm matrix and print a report")
    p.add_argument("--config", help="JSON experiment config (overrides the flags below)")
    p.add_argument("--algorithms", default="ff,bf")
    p.add_argument("--source", default="uniform:n=10",
                   help="generator spec or file:path[,path...]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--timing", action="store_true", help="fill the runtime_ms column")
    p.add_argument("--tape", action="append", metavar="ALG=LEN:HEX",
                   help="replay a serialized tape for one algorithm")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("advice", help="run one advice algorithm and show its tape")
    p.add_argument("algorithm")
    p.add_argument("instance")
    p.add_argument("--tape", help="replay this LEN:HEX tape instead of asking the oracle")
    p.set_defaults(func=cmd_advice)

    p = sub.add_parser("family", help="members of the adversarial families")
    fam = p.add_subparsers(dest="family", required=True)
    t1 = fam.add_parser("t1", help="index family")
    t1.add_argument("--n", type=int, required=True)
    t1.add_argument("--k", type=int, required=True)
    t1.add_argument("--index", type=int, default=0)
    t1.add_argument("--count", action="store_true")
    t1.add_argument("-o", "--output")
    t2 = fam.add_parser("t2", help="level family")
    t2.add_argument("--n", type=int, required=True)
    t2.add_argument("--m", type=int, required=True)
    t2.add_argument("--levels", required=True, help="comma-separated counts a_1..a_(m-2)")
    t2.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("reduce", help="string guessing through separation into bin packing")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--bits")
    src.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inner", default="bf", help="nf, ff, bf, harmonic:K or cheat")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bound", help="evaluate the advice lower bounds")
    p.add_argument("kind", choices=["guessing", "binpack"])
    p.add_argument("value", help="alpha for guessing, competitive ratio c for binpack")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="check a packing file against an instance")
    p.add_argument("instance")
    p.add_argument("packing", help='JSON {"bins": [[i, ...], ...]}')
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AdvicePackError, ValueError, KeyError, OSError) as exc:
        print(f"advicepack: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
