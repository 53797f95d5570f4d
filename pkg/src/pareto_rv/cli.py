"""Command-line interface: ``prv verify``, ``prv generate``, ``prv bench``.

Exit codes: 0 positive instance, 1 negative instance, 2 usage, parse or I/O
error.  ``generate`` and ``bench`` exit 0 on success.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import ExitStack

from . import bench
from .arena import ArenaError, product
from .emptiness import witness_to_play_report
from .generators import gen_from_cnf, gen_intersection, gen_random, parse_dimacs
from .io import parse_arena, parse_moore, write_arena
from .lattice import format_payoff
from .verifier import ALGORITHMS, pareto_front, verify

EXIT_POSITIVE, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def _antichain_text(A) -> str:
    return "{" + ", ".join(format_payoff(p) for p in A) + "}"


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def cmd_verify(args, out) -> int:
    arena = parse_arena(_read(args.path))
    if args.machine:
        arena = product(arena, parse_moore(_read(args.machine)))
    elif not arena.single_player:
        raise ArenaError("arena has Player-0 vertices; pass --machine to fix a strategy")
    result = verify(arena, args.algorithm)
    st = result.stats
    print(result.verdict, file=out)
    print(f"algorithm: {result.algorithm}", file=out)
    if args.pareto:
        print(f"pareto: {_antichain_text(pareto_front(arena))}", file=out)
    if args.certificate and result.certificate is not None:
        print(f"certificate: {_antichain_text(result.certificate)}", file=out)
    if args.witness and result.counterexample is not None:
        report = witness_to_play_report(arena, result.counterexample)
        w = result.counterexample
        print(f"witness: {report.trace}", file=out)
        print(f"witness payoff: {report.extended}", file=out)
        print(f"lasso: prefix={' '.join(map(str, w.prefix))} cycle={' '.join(map(str, w.cycle))}", file=out)
    print(f"emptiness calls: {st.emptiness_calls}", file=out)
    print(f"iterations: {st.iterations}", file=out)
    if st.antichain_sizes:
        print("antichain sizes: " + " ".join(map(str, st.antichain_sizes)), file=out)
    print(f"wall time: {st.wall_time:.6f} s", file=out)
    return EXIT_POSITIVE if result.positive else EXIT_NEGATIVE


def cmd_generate(args, out) -> int:
    if args.kind == "intersection":
        arena = gen_intersection(args.copies, args.per_copy_objectives, args.negative)
    elif args.kind == "random":
        arena = gen_random(args.vertices, args.objectives, args.max_priority, args.seed)
    else:
        if not args.dimacs:
            raise ValueError("generate cnf needs --dimacs PATH")
        arena = gen_from_cnf(parse_dimacs(_read(args.dimacs)))
    out.write(write_arena(arena))
    return 0


def cmd_bench(args, out) -> int:
    if args.family == "random":
        instances = bench.family_instances(
            "random", vertices=args.vertices, objectives=args.objectives,
            max_priority=args.max_priority, seeds=range(args.seed, args.seed + args.repetitions),
        )
    else:
        instances = bench.family_instances(args.family, copies=args.copies, negative=args.negative)
    algorithms = ["antichain", "counterexample"] + (["naive"] if args.naive else [])
    with ExitStack() as stack:
        dest = stack.enter_context(open(args.output, "w", newline="")) if args.output else out
        its = stack.enter_context(open(args.iterations, "w", newline="")) if args.iterations else None
        rows = bench.run_bench(instances, dest, algorithms, args.with_stats, its, args.workers)
    if any(r["result"] == "mismatch" for r in rows):
        print("warning: verifiers disagree on some instance", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prv", description="Pareto-rational verification of single-player parity games.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="decide a verification instance")
    v.add_argument("path", help="SPGAME file")
    v.add_argument("--algorithm", choices=sorted(ALGORITHMS), default="counterexample")
    v.add_argument("--machine", help="MOORE file fixing the system's strategy")
    v.add_argument("--witness", action="store_true", help="print the counterexample play")
    v.add_argument("--certificate", action="store_true", help="print the certificate antichain")
    v.add_argument("--pareto", action="store_true", help="print the Pareto-optimal payoffs")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("generate", help="write an instance as SPGAME to standard output")
    g.add_argument("kind", choices=["intersection", "random", "cnf"])
    g.add_argument("--copies", type=int, default=1)
    g.add_argument("--per-copy-objectives", action="store_true")
    g.add_argument("--negative", action="store_true")
    g.add_argument("--vertices", type=int, default=10)
    g.add_argument("--objectives", type=int, default=3)
    g.add_argument("--max-priority", type=int, default=4)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--dimacs", help="DIMACS CNF file (kind cnf)")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="benchmark the verifiers, CSV output")
    b.add_argument("family", choices=bench.FAMILIES)
    b.add_argument("--copies", type=int, nargs="+", default=[1])
    b.add_argument("--negative", action="store_true")
    b.add_argument("--vertices", type=int, default=20)
    b.add_argument("--objectives", type=int, nargs="+", default=[4])
    b.add_argument("--max-priority", type=int, default=4)
    b.add_argument("--seed", type=int, default=0, help="first seed")
    b.add_argument("--repetitions", type=int, default=1, help="seeds per objective count")
    b.add_argument("--naive", action="store_true", help="also time the naive algorithm")
    b.add_argument("--with-stats", action="store_true", help="compute ratio_lost_payoffs")
    b.add_argument("--output", "-o", help="CSV path (default: standard output)")
    b.add_argument("--iterations", help="per-iteration CSV path")
    b.add_argument("--workers", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return args.func(args, out)
    except (OSError, ValueError) as exc:  # ParseError and ArenaError are ValueErrors
        print(f"prv: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
