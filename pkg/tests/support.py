"""Instance builders shared by the test modules."""

from __future__ import annotations

import itertools
import random

from pareto_rv import acceptance as acc
from pareto_rv.arena import GameArena
from pareto_rv.generators import CnfFormula, gen_random


def random_arena(seed: int, max_vertices: int = 10, max_objectives: int = 4) -> GameArena:
    """Small random arena with mixed size, objective count and priority range."""
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    t = rng.randint(1, max_objectives)
    d = rng.choice((2, 4))
    hi = rng.choice((1, 2, 3, 4))
    return gen_random(n, t, d, seed=seed, out_degree=(1, hi))


def random_formula(arena: GameArena, rng: random.Random, depth: int = 3) -> acc.Formula:
    """Random Emerson-Lei formula over marks that exist in ``arena``."""
    if depth == 0 or rng.random() < 0.3:
        i = rng.randrange(len(arena.max_priority))
        c = rng.randint(0, arena.max_priority[i])
        mark = acc.Mark(i, c)
        r = rng.random()
        if r < 0.45:
            return acc.Inf(mark)
        if r < 0.9:
            return acc.Fin(mark)
        return acc.TRUE if r < 0.95 else acc.FALSE
    parts = [random_formula(arena, rng, depth - 1) for _ in range(rng.randint(2, 3))]
    return acc.conj(*parts) if rng.random() < 0.5 else acc.disj(*parts)


def _canonical(m: int, clauses) -> tuple:
    """Smallest form under variable renaming, polarity flips and clause order."""
    best = None
    for perm in itertools.permutations(range(1, m + 1)):
        for flips in itertools.product((1, -1), repeat=m):
            def image(lit):
                v = perm[abs(lit) - 1]
                return v * flips[abs(lit) - 1] * (1 if lit > 0 else -1)

            form = tuple(sorted(tuple(sorted(image(l) for l in c)) for c in clauses))
            if best is None or form < best:
                best = form
    return best


def small_cnfs(max_vars: int = 2, max_clauses: int = 2) -> list[CnfFormula]:
    """Every CNF up to the given size, one per symmetry class.

    Clauses are nonempty sets of at most three literals without repeated
    variables; every variable occurs somewhere.
    """
    out = {}
    for m in range(1, max_vars + 1):
        lits = [l for v in range(1, m + 1) for l in (v, -v)]
        clause_pool = [
            c
            for k in range(1, 4)
            for c in itertools.combinations(lits, k)
            if len({abs(l) for l in c}) == k
        ]
        for r in range(1, max_clauses + 1):
            for clauses in itertools.combinations_with_replacement(clause_pool, r):
                if {abs(l) for c in clauses for l in c} != set(range(1, m + 1)):
                    continue
                key = (m, _canonical(m, clauses))
                out.setdefault(key, CnfFormula(m, tuple(clauses)))
    return list(out.values())


def random_cnf(rng: random.Random, max_vars: int = 4, max_clauses: int = 4) -> CnfFormula:
    while True:
        m = rng.randint(1, max_vars)
        r = rng.randint(1, max_clauses)
        clauses = []
        for _ in range(r):
            k = rng.randint(1, min(3, m))
            clauses.append(tuple(v * rng.choice((1, -1)) for v in rng.sample(range(1, m + 1), k)))
        try:
            return CnfFormula(m, tuple(clauses))
        except ValueError:
            continue  # some variable unused; draw again
