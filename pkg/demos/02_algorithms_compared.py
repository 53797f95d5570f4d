"""Three algorithms, one question.

* naive: test all 2^t payoffs for realizability, keep the maximal ones,
  then look for a lost play with one of those payoffs;
* antichain descent: walk the payoff lattice downwards from (1,...,1),
  stopping as soon as a lost Pareto-optimal play appears;
* counterexample-guided: grow a certificate from the lost plays that are
  not yet explained away.

On the second family of intersection instances the number of objectives
grows with the number of copies (t = 2 + 2k).  The descent visits the
whole lattice; the counterexample algorithm needs a handful of iterations.
"""

import time

from pareto_rv import gen_intersection
from pareto_rv.verifier import ALGORITHMS

print(f"{'k':>3} {'t':>3} {'algorithm':>15} {'verdict':>9} {'calls':>7} {'seconds':>9}")
for k in (1, 2, 3, 4, 5):
    arena = gen_intersection(k, per_copy_objectives=True)
    for name, fn in ALGORITHMS.items():
        if name == "naive" and arena.objective_count > 10:
            continue  # 2^t realizability checks
        t0 = time.perf_counter()
        r = fn(arena)
        dt = time.perf_counter() - t0
        print(f"{k:>3} {arena.objective_count:>3} {name:>15} {r.verdict:>9} "
              f"{r.stats.emptiness_calls:>7} {dt:>9.4f}")
