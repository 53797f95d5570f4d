"""Fixing the system's strategy with a Moore machine.

In a two-player arena the system owns some vertices.  A finite-memory
strategy, written as a Moore machine, resolves those choices; the product
of arena and machine is a single-player arena that the verifiers accept.

Here the system serves two requests in turn.  Serving only one of them
starves the other; alternating (one bit of memory) keeps both happy.
"""

from pareto_rv import GameArena, MooreMachine, product, verify, witness_to_play_report
from pareto_rv.io import write_moore

# vertex 0: the system picks a request; vertices 1, 2: serve request one / two
# system objective: request two is served infinitely often
# environment objectives: request one / request two is served infinitely often
arena = GameArena(
    owner=[0, 1, 1],
    successors=[[1, 2], [0], [0]],
    initial=0,
    priorities=[(1, 1, 1), (1, 0, 1), (0, 1, 0)],
    max_priority=[2, 2, 2],
)

always_one = MooreMachine.memoryless({0: 1}, arena.vertex_count)
update = {(m, v): (1 - m if v == 0 else m) for m in (0, 1) for v in range(3)}
alternate = MooreMachine(2, 1, update, {(0, 0): 1, (1, 0): 2})

for name, machine in (("always serve one", always_one), ("alternate", alternate)):
    g = product(arena, machine)
    r = verify(g)
    print(f"{name}: {g.vertex_count} product vertices, verdict {r.verdict}")
    if not r.positive:
        print("   ", witness_to_play_report(g, r.counterexample))

print("\nthe alternating machine in MOORE format:\n" + write_moore(alternate))
