"""Benchmark harness: run the verifiers on instance families and write CSV.

One row per instance with the columns of :data:`CSV_HEADER`.  Times are
wall-clock seconds per verifier call, excluding instance generation.  An
optional second CSV records the per-iteration antichain size and lost-play
query time of the counterexample algorithm.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .arena import GameArena
from .generators import gen_intersection, gen_random
from .lattice import all_payoffs
from .realizability import exists_extended, exists_payoff_eq
from .verifier import antichain_verify, counterexample_verify, naive_verify, pareto_front

__all__ = [
    "CSV_HEADER",
    "ITERATION_HEADER",
    "Instance",
    "family_instances",
    "lost_payoff_ratio",
    "measure",
    "run_bench",
]

CSV_HEADER = [
    "instance", "family", "nbr_vertices", "nbr_objectives", "seed", "result",
    "AO_time", "CE_time", "naive_time", "pareto_size", "ratio_lost_payoffs",
    "A_size_alg1", "A_size_alg2",
]
ITERATION_HEADER = ["instance", "iteration", "A_size", "call_time"]

FAMILIES = ("intersection", "family2", "random")


@dataclass(frozen=True)
class Instance:
    """A recipe for an arena; cheap to pickle, built inside the worker."""

    name: str
    family: str
    copies: int = 1
    negative: bool = False
    vertices: int = 0
    objectives: int = 0
    max_priority: int = 4
    seed: int | str = ""

    def build(self) -> GameArena:
        if self.family == "intersection":
            return gen_intersection(self.copies, False, self.negative)
        if self.family == "family2":
            return gen_intersection(self.copies, True, self.negative)
        if self.family == "random":
            return gen_random(self.vertices, self.objectives, self.max_priority, int(self.seed))
        raise ValueError(f"unknown family {self.family!r}")


def family_instances(
    family: str,
    copies: Iterable[int] = (1,),
    negative: bool = False,
    vertices: int = 20,
    objectives: Iterable[int] = (4,),
    max_priority: int = 4,
    seeds: Iterable[int] = (0,),
) -> list[Instance]:
    """Instances of one family: a ``copies`` sweep, or ``objectives`` x ``seeds``."""
    if family in ("intersection", "family2"):
        return [
            Instance(f"{family}-k{k}{'-neg' if negative else ''}", family, copies=k, negative=negative)
            for k in copies
        ]
    if family == "random":
        return [
            Instance(f"random-n{vertices}-t{t}-s{s}", "random", vertices=vertices,
                     objectives=t, max_priority=max_priority, seed=s)
            for t in objectives
            for s in seeds
        ]
    raise ValueError(f"unknown family {family!r}; pick one of {FAMILIES}")


def lost_payoff_ratio(arena: GameArena) -> float:
    """Share of realizable payoffs that some lost play also realizes."""
    realizable = lost = 0
    for p in all_payoffs(arena.objective_count):
        if exists_payoff_eq(arena, p) is None:
            continue
        realizable += 1
        if exists_extended(arena, 0, p, "eq") is not None:
            lost += 1
    return lost / realizable


def _timed(fn, arena):
    t0 = time.perf_counter()
    result = fn(arena)
    return result, time.perf_counter() - t0


def measure(
    inst: Instance,
    algorithms: Iterable[str] = ("antichain", "counterexample"),
    with_stats: bool = False,
) -> tuple[dict, list[dict]]:
    """Run the requested verifiers on one instance.

    Returns the CSV row and the per-iteration rows of the counterexample
    algorithm (empty if it was not run).  ``result`` is ``"mismatch"`` if the
    verifiers disagree.
    """
    arena = inst.build()
    algorithms = set(algorithms)
    row = {k: "" for k in CSV_HEADER}
    row.update(
        instance=inst.name, family=inst.family, nbr_vertices=arena.vertex_count,
        nbr_objectives=arena.objective_count, seed=inst.seed,
    )
    verdicts = set()
    iterations: list[dict] = []
    pareto_size = None
    if "antichain" in algorithms:
        r, dt = _timed(antichain_verify, arena)
        row.update(AO_time=f"{dt:.6f}", A_size_alg1=len(r.antichain))
        verdicts.add(r.verdict)
        if r.positive:
            # the descent ran to completion, so its antichain is the Pareto set
            pareto_size = len(r.antichain)
    if "counterexample" in algorithms:
        r, dt = _timed(counterexample_verify, arena)
        row.update(CE_time=f"{dt:.6f}", A_size_alg2=len(r.antichain))
        verdicts.add(r.verdict)
        iterations = [
            {"instance": inst.name, "iteration": i + 1, "A_size": a, "call_time": f"{c:.6f}"}
            for i, (a, c) in enumerate(zip(r.stats.antichain_sizes, r.stats.call_times))
        ]
    if "naive" in algorithms:
        r, dt = _timed(naive_verify, arena)
        row["naive_time"] = f"{dt:.6f}"
        verdicts.add(r.verdict)
        pareto_size = len(r.antichain)
    if pareto_size is None:
        pareto_size = len(pareto_front(arena))
    row["pareto_size"] = pareto_size
    if with_stats:
        row["ratio_lost_payoffs"] = f"{lost_payoff_ratio(arena):.6f}"
    row["result"] = verdicts.pop() if len(verdicts) == 1 else "mismatch"
    return row, iterations


def _measure_star(args):
    return measure(*args)


def run_bench(
    instances: Iterable[Instance],
    out,
    algorithms: Iterable[str] = ("antichain", "counterexample"),
    with_stats: bool = False,
    iterations_out=None,
    workers: int = 1,
) -> list[dict]:
    """Measure every instance and write the CSV(s) to the open files given.

    With ``workers > 1`` instances run in a process pool; rows are written
    by the calling process in input order.
    """
    algorithms = tuple(algorithms)
    jobs = [(inst, algorithms, with_stats) for inst in instances]
    writer = csv.DictWriter(out, fieldnames=CSV_HEADER)
    writer.writeheader()
    it_writer = None
    if iterations_out is not None:
        it_writer = csv.DictWriter(iterations_out, fieldnames=ITERATION_HEADER)
        it_writer.writeheader()

    def results() -> Iterator[tuple[dict, list[dict]]]:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                yield from pool.map(_measure_star, jobs)
        else:
            yield from map(_measure_star, jobs)

    rows = []
    for row, its in results():
        writer.writerow(row)
        out.flush()
        if it_writer is not None:
            it_writer.writerows(its)
        rows.append(row)
    return rows
