"""Hardness in action: co-3SAT as a verification problem.

Every CNF formula becomes an arena whose verification instance is positive
exactly when the formula is unsatisfiable.  A play that picks a valuation
in the first component and is lost corresponds to a satisfying assignment;
the clause gadgets in the second component make every falsifying
valuation's payoff dominated.
"""

from pareto_rv import CnfFormula, gen_from_cnf, verify, witness_to_play_report
from pareto_rv.oracle import cnf_satisfiable

formulas = [
    CnfFormula(1, ((1,), (-1,))),
    CnfFormula(2, ((1, 2), (-1, -2))),
    CnfFormula(2, ((1, 2), (-1, 2), (1, -2), (-1, -2))),
    CnfFormula(3, ((1, 2, 3), (-1, -2), (-2, -3), (-1, -3))),
]

for f in formulas:
    arena = gen_from_cnf(f)
    r = verify(arena)
    print(f"{str(f):45}  |V|={arena.vertex_count:3}  t={arena.objective_count:2}  "
          f"satisfiable={cnf_satisfiable(f)!s:5}  verdict={r.verdict}")
    if not r.positive:
        # the lost play spells out a satisfying valuation
        print("    witness:", witness_to_play_report(arena, r.counterexample).trace)
