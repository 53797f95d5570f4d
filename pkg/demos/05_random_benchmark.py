"""A small benchmark on random arenas, in the CSV format of the harness.

The same rows can be produced from the shell with

    prv bench random --vertices 25 --objectives 4 6 8 --repetitions 5 --with-stats

``ratio_lost_payoffs`` is the share of realizable payoffs that some lost
play realizes; ``A_size_alg2`` is the size of the counterexample
algorithm's final antichain, never larger than the Pareto set on positive
instances.
"""

import csv
import io
from statistics import mean

from pareto_rv.bench import family_instances, run_bench

out = io.StringIO()
instances = family_instances("random", vertices=25, objectives=(4, 6, 8), seeds=range(5))
rows = run_bench(instances, out, with_stats=True)
print(out.getvalue())

for t in ("4", "6", "8"):
    sel = [r for r in rows if str(r["nbr_objectives"]) == t]
    pos = [r for r in sel if r["result"] == "positive"]
    print(f"t={t}: {len(pos)}/{len(sel)} positive, mean Pareto size "
          f"{mean(int(r['pareto_size']) for r in sel):.1f}, mean lost ratio "
          f"{mean(float(r['ratio_lost_payoffs']) for r in sel):.2f}")
