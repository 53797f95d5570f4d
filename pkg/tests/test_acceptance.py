"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

The lines are printed as the tests run (visible with ``-s``) and collected
into an "acceptance criteria" section of the pytest terminal summary.
"""

from __future__ import annotations

import csv
import functools
import io
import random
import time

from conftest import ACCEPTANCE_RESULTS
from support import random_arena, random_cnf, random_formula, small_cnfs

from pareto_rv.arena import check_lasso
from pareto_rv.bench import family_instances, run_bench
from pareto_rv.emptiness import check
from pareto_rv.acceptance import eval_on_inf_set
from pareto_rv.generators import gen_from_cnf, gen_intersection
from pareto_rv.lattice import Domination, antichain_below, ceil, payoff
from pareto_rv.oracle import cnf_satisfiable, oracle_check_formula, oracle_realizable, oracle_verify
from pareto_rv.realizability import lasso_payoff
from pareto_rv.verifier import (
    ALGORITHMS,
    antichain_verify,
    check_certificate,
    compute_pareto_set,
    counterexample_verify,
    naive_verify,
    pareto_front,
)

EXPECTED_PARETO = {payoff("1011"), payoff("1100")}
RANDOM_INSTANCES = 500
CNF_RANDOM = 100
# the naive algorithm tests 2^t payoffs; the descent can also be exponential in t
NAIVE_MAX_T = 10
DESCENT_MAX_T = 12


def record(number: int, passed: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS[number] = (passed, detail)
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
    assert passed, detail


# -- shared suites (computed once, reused by criterion 5) ----------------------


@functools.cache
def suite_intersection():
    arena = gen_intersection(1)
    runs = {}
    for name, fn in ALGORITHMS.items():
        t0 = time.perf_counter()
        runs[name] = fn(arena)
        runs[name].stats.wall_time = time.perf_counter() - t0
    return arena, runs


@functools.cache
def suite_random():
    rows = []
    for seed in range(RANDOM_INSTANCES):
        arena = random_arena(seed)
        rows.append((seed, arena, {name: fn(arena) for name, fn in ALGORITHMS.items()}))
    return rows


@functools.cache
def suite_cnf():
    rng = random.Random(2024)
    formulas = [("exhaustive", f) for f in small_cnfs(2, 2)]
    formulas += [("random", random_cnf(rng, 4, 4)) for _ in range(CNF_RANDOM)]
    rows = []
    for kind, f in formulas:
        arena = gen_from_cnf(f)
        t = arena.objective_count
        runs = {"counterexample": counterexample_verify(arena)}
        if kind == "exhaustive" or t <= DESCENT_MAX_T:
            runs["antichain"] = antichain_verify(arena)
        if kind == "exhaustive" or t <= NAIVE_MAX_T:
            runs["naive"] = naive_verify(arena)
        rows.append((kind, f, arena, runs))
    return rows


# -- criteria -------------------------------------------------------------------


def test_criterion_1_intersection_golden():
    arena, runs = suite_intersection()
    problems = []
    for name, r in runs.items():
        if not r.positive:
            problems.append(f"{name} negative")
        if set(r.antichain) != EXPECTED_PARETO:
            problems.append(f"{name} antichain {r.antichain}")
        if r.stats.wall_time >= 1.0:
            problems.append(f"{name} took {r.stats.wall_time:.2f}s")
    if set(compute_pareto_set(arena)) != EXPECTED_PARETO:
        problems.append("compute_pareto_set differs")
    slowest = max(r.stats.wall_time for r in runs.values())
    record(1, not problems, "; ".join(problems) or f"P_G = {{(1,0,1,1),(1,1,0,0)}} under all three, slowest {slowest:.3f}s")


def test_criterion_2_negative_variant():
    arena = gen_intersection(1, negative=True)
    realizable = oracle_realizable(arena, cap=32)
    pareto = ceil(p for _, p in realizable)
    problems = []
    for name, fn in ALGORITHMS.items():
        r = fn(arena)
        if r.positive:
            problems.append(f"{name} positive")
            continue
        check_lasso(arena, r.counterexample)
        won, p = lasso_payoff(arena, r.counterexample)
        if won or p not in pareto or (0, p) not in realizable:
            problems.append(f"{name} witness payoff {won},{p} not lost Pareto-optimal")
    if oracle_verify(arena, cap=32).positive:
        problems.append("oracle says positive")
    record(2, not problems, "; ".join(problems) or "negative under all three; witnesses lost and Pareto-optimal per oracle")


def test_criterion_3_oracle_equivalence():
    t0 = time.perf_counter()
    mismatches = []
    positives = 0
    for seed, arena, runs in suite_random():
        oracle = oracle_verify(arena)
        verdicts = {name: r.positive for name, r in runs.items()}
        if set(verdicts.values()) != {oracle.positive}:
            mismatches.append(f"seed {seed}: {verdicts} vs oracle {oracle.positive}")
        if set(compute_pareto_set(arena)) != set(oracle.antichain):
            mismatches.append(f"seed {seed}: Pareto set differs")
        positives += oracle.positive
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 300
    detail = (
        f"{RANDOM_INSTANCES} instances ({positives} positive), 0 mismatches, {elapsed:.1f}s"
        if ok else f"{len(mismatches)} mismatches, {elapsed:.1f}s: {mismatches[:3]}"
    )
    record(3, ok, detail)


def test_criterion_4_reduction():
    mismatches = []
    counts = {"exhaustive": 0, "random": 0}
    unsat = 0
    for kind, f, arena, runs in suite_cnf():
        expected = not cnf_satisfiable(f)
        counts[kind] += 1
        unsat += expected
        for name, r in runs.items():
            if r.positive != expected:
                mismatches.append(f"{f} [{name}]")
    detail = (
        f"{counts['exhaustive']} exhaustive + {counts['random']} random formulas "
        f"({unsat} unsatisfiable), 0 mismatches"
        if not mismatches else f"{len(mismatches)} mismatches: {mismatches[:3]}"
    )
    record(4, not mismatches, detail)


def _certificate_problems(label, arena, r):
    out = []
    A = r.certificate
    if not check_certificate(arena, A):
        out.append(f"{label}: certificate rejected")
    P = pareto_front(arena)
    if A and antichain_below(A, P) is Domination.NEITHER:
        out.append(f"{label}: A not below P_G")
    hist = r.history
    for before, after in zip(hist, hist[1:]):
        if antichain_below(before, after) is not Domination.STRICTLY_BELOW:
            out.append(f"{label}: history not strictly increasing")
            break
    if len(hist) - 1 > 2 ** arena.objective_count:
        out.append(f"{label}: {len(hist) - 1} steps")
    return out


def test_criterion_5_certificate_structure():
    problems = []
    checked = 0
    _, runs = suite_intersection()
    cases = [("intersection", gen_intersection(1), runs["counterexample"])]
    cases += [(f"random seed {s}", a, rs["counterexample"]) for s, a, rs in suite_random()]
    cases += [(str(f), a, rs["counterexample"]) for _, f, a, rs in suite_cnf()]
    for label, arena, r in cases:
        if not r.positive:
            continue
        checked += 1
        problems += _certificate_problems(label, arena, r)
    record(5, not problems, "; ".join(problems[:3]) or f"{checked} positive instances, certificates valid")


def _best_time(fn, arena, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(arena)
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_6_scaling():
    ks = (10, 100, 1000)
    problems = []
    report = []
    for name, fn in (("antichain", antichain_verify), ("counterexample", counterexample_verify)):
        times = []
        for k in ks:
            arena = gen_intersection(k)
            times.append(_best_time(fn, arena, 3 if k < 1000 else 1))
        if times[-1] >= 60:
            problems.append(f"{name} k=1000 took {times[-1]:.1f}s")
        for a, b in zip(times, times[1:]):
            if a > 1.2 * b:
                problems.append(f"{name} times not monotone: {times}")
                break
        report.append(f"{name} " + "/".join(f"{x:.3f}" for x in times) + "s")
    record(6, not problems, "; ".join(problems) or "k=10/100/1000: " + ", ".join(report))


def test_criterion_7_family2_ratio():
    ratios = []
    for k in (2, 4, 6):
        arena = gen_intersection(k, per_copy_objectives=True)
        ao = _best_time(antichain_verify, arena, 1)
        ce = _best_time(counterexample_verify, arena, 1)
        ratios.append(ce / ao)
    ok = all(b < a for a, b in zip(ratios, ratios[1:]))
    record(7, ok, "CE/AO at t=6,10,14: " + ", ".join(f"{x:.4f}" for x in ratios))


def test_criterion_8_emptiness_referee():
    rng = random.Random(8)
    mismatches = []
    nonempty = 0
    for seed in range(500):
        arena = random_arena(10_000 + seed)
        f = random_formula(arena, rng)
        w = check(arena, f)
        expected = oracle_check_formula(arena, f)
        if (w is not None) != expected:
            mismatches.append(f"seed {seed}: {f}")
        elif w is not None:
            nonempty += 1
            check_lasso(arena, w)
            if not eval_on_inf_set(arena, f, w.inf_set):
                mismatches.append(f"seed {seed}: lasso violates {f}")
    record(8, not mismatches, f"500 pairs ({nonempty} nonempty), 0 mismatches" if not mismatches else str(mismatches[:3]))


def test_criterion_9_bench_statistics():
    out = io.StringIO()
    instances = family_instances("random", vertices=12, objectives=(6,), seeds=range(10))
    run_bench(instances, out, with_stats=True)
    rows = list(csv.DictReader(io.StringIO(out.getvalue())))
    problems = []
    if len(rows) != 10:
        problems.append(f"{len(rows)} rows")
    for row in rows:
        ratio = float(row["ratio_lost_payoffs"])
        if not 0.0 <= ratio <= 1.0:
            problems.append(f"{row['instance']}: ratio {ratio}")
        if row["result"] == "mismatch":
            problems.append(f"{row['instance']}: verifiers disagree")
        if row["result"] == "positive" and int(row["A_size_alg2"]) > int(row["pareto_size"]):
            problems.append(f"{row['instance']}: A_size_alg2 > pareto_size")
        if row["nbr_objectives"] != "6":
            problems.append(f"{row['instance']}: t = {row['nbr_objectives']}")
    positives = sum(r["result"] == "positive" for r in rows)
    record(9, not problems, "; ".join(problems) or f"10 rows ({positives} positive), columns consistent")
