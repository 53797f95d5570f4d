"""The traffic-light intersection.

Three cars approach a crossroads controlled by traffic lights.  The system
wants no crash and no car waiting forever; the environment (the cars) has
four objectives of its own.  Every vertex of the arena loops on itself and
the loop fixes the outcome of the plays that end there.

We ask: does every play whose payoff is Pareto-optimal for the environment
also satisfy the system?  Then we break the arena so that one
Pareto-optimal outcome is lost, and look at the counterexample.
"""

from pareto_rv import gen_intersection, verify, witness_to_play_report
from pareto_rv.lattice import format_payoff
from pareto_rv.oracle import oracle_realizable

arena = gen_intersection(1)
print(f"{arena.vertex_count} vertices, {arena.objective_count} environment objectives")

# Nine payoffs can be realized; two of them are maximal.
realizable = sorted({p for _, p in oracle_realizable(arena, cap=32)})
print("realizable payoffs:", " ".join(format_payoff(p) for p in realizable))

result = verify(arena, "counterexample")
print(f"\nverdict: {result.verdict}")
print("certificate:", result.certificate)
print("antichain sizes per iteration:", result.stats.antichain_sizes)

# Losing the loop on v21 makes the Pareto-optimal payoff (1,1,0,0) lost.
broken = gen_intersection(1, negative=True)
result = verify(broken, "counterexample")
print(f"\nnegative variant: {result.verdict}")
print("counterexample:", witness_to_play_report(broken, result.counterexample))
