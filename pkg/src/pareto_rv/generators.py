"""Instance families: the intersection example, random arenas, CNF reduction."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arena import GameArena

__all__ = [
    "INTERSECTION_LOOPS",
    "INTERSECTION_EDGES",
    "intersection_base",
    "gen_intersection",
    "gen_random",
    "CnfFormula",
    "parse_dimacs",
    "write_dimacs",
    "gen_from_cnf",
]

# The traffic-light arena: every vertex loops on itself, and the loop label
# is the extended payoff (won, (no car waits, c2 first, c3 first,
# simultaneous crossing)) of the plays that end there.
INTERSECTION_LOOPS: list[tuple[int, tuple[int, int, int, int]]] = [
    (0, (0, 0, 0, 0)),  # 0: all red
    (0, (0, 0, 0, 1)),  # 1: l1+l2 green, crash
    (0, (1, 0, 0, 1)),  # 2
    (1, (0, 0, 1, 1)),  # 3: l1+l3 green
    (1, (1, 0, 1, 1)),  # 4
    (0, (0, 0, 0, 1)),  # 5: l2+l3 green, crash
    (0, (0, 0, 0, 1)),  # 6
    (0, (0, 0, 1, 0)),  # 7: l3 green first
    (0, (0, 0, 1, 0)),  # 8
    (1, (1, 0, 1, 0)),  # 9
    (1, (0, 0, 1, 0)),  # 10
    (1, (1, 0, 1, 0)),  # 11
    (0, (0, 1, 0, 0)),  # 12: l2 green first
    (0, (0, 1, 0, 0)),  # 13
    (1, (1, 1, 0, 0)),  # 14
    (1, (0, 1, 0, 0)),  # 15
    (1, (1, 1, 0, 0)),  # 16
    (1, (0, 0, 0, 0)),  # 17: l1 green first
    (1, (0, 0, 1, 0)),  # 18
    (1, (1, 0, 1, 0)),  # 19
    (1, (0, 1, 0, 0)),  # 20
    (1, (1, 1, 0, 0)),  # 21
]

INTERSECTION_EDGES: list[tuple[int, int]] = [
    (0, 1), (0, 3), (0, 5), (0, 7), (0, 12), (0, 17),
    (1, 2), (3, 4), (5, 6),
    (7, 8), (7, 10), (8, 9), (10, 11),
    (12, 13), (12, 15), (13, 14), (15, 16),
    (17, 18), (17, 20), (18, 19), (20, 21),
]

# last vertex of the last branch whose loop realizes (1,1,0,0)
NEGATIVE_VERTEX = 21


def _base_successors() -> list[list[int]]:
    succ = [[v] for v in range(len(INTERSECTION_LOOPS))]
    for a, b in INTERSECTION_EDGES:
        succ[a].append(b)
    return succ


def intersection_base(negative: bool = False) -> GameArena:
    """The 22-vertex arena of the intersection example (t = 4)."""
    return gen_intersection(1, per_copy_objectives=False, negative=negative)


def gen_intersection(copies: int = 1, per_copy_objectives: bool = False, negative: bool = False) -> GameArena:
    """``copies`` disjoint copies of the intersection arena.

    With more than one copy a fresh initial vertex (no self-loop, priority 1
    everywhere) leads to each copy's initial vertex.  Objectives are shared
    across copies unless ``per_copy_objectives``: then only "no car waits"
    and "simultaneous crossing" are shared and every copy gets its own pair
    of crossing-order objectives, giving ``t = 2 + 2 * copies`` laid out as
    ``(waits, order_1, order_1', ..., order_k, order_k', simultaneous)``.

    ``negative`` makes the loop of vertex 21 lost in every copy.
    """
    if copies < 1:
        raise ValueError("copies must be positive")
    t = 2 + 2 * copies if per_copy_objectives else 4
    base = _base_successors()
    size = len(INTERSECTION_LOOPS)
    offset = 1 if copies > 1 else 0

    owner, succ, prios, labels = [], [], [], []
    if offset:
        owner.append(1)
        succ.append([offset + j * size for j in range(copies)])
        prios.append((1,) * (t + 1))
        labels.append("init")
    for j in range(copies):
        shift = offset + j * size
        for v, (won, bits) in enumerate(INTERSECTION_LOOPS):
            if negative and v == NEGATIVE_VERTEX:
                won = 0
            vec = [1] * (t + 1)
            vec[0] = 0 if won else 1
            if per_copy_objectives:
                slots = [1, 2 + 2 * j, 3 + 2 * j, t]
            else:
                slots = [1, 2, 3, 4]
            for slot, b in zip(slots, bits):
                vec[slot] = 0 if b else 1
            owner.append(1)
            succ.append([w + shift for w in base[v]])
            prios.append(tuple(vec))
            labels.append(f"v{v}" if copies == 1 else f"c{j}.v{v}")
    return GameArena(owner, succ, 0, prios, max_priority=[2] * (t + 1), labels=labels)


def gen_random(
    n: int,
    t: int,
    d: int = 4,
    seed: int = 0,
    out_degree: tuple[int, int] = (1, 4),
) -> GameArena:
    """Random single-player arena, deterministic in ``seed``.

    Each vertex draws an out-degree uniformly from ``out_degree`` (capped at
    ``n``) and distinct targets uniformly; every priority, including the
    system's, is uniform in ``0..d``.  Vertex 0 is initial.
    """
    lo, hi = out_degree
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    if d < 0 or d % 2:
        raise ValueError(f"maximum priority must be even and nonnegative, got {d}")
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid out-degree range {out_degree}")
    rng = random.Random(seed)
    succ, prios = [], []
    for _ in range(n):
        k = rng.randint(min(lo, n), min(hi, n))
        succ.append(sorted(rng.sample(range(n), k)))
        prios.append(tuple(rng.randint(0, d) for _ in range(t + 1)))
    return GameArena([1] * n, succ, 0, prios, max_priority=[d] * (t + 1))


@dataclass(frozen=True)
class CnfFormula:
    """CNF with at most three literals per clause; literal ``-k`` is "not x_k"."""

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        problems = self.problems()
        if problems:
            raise ValueError("; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        if not self.clauses:
            out.append("formula has no clause")
        used = set()
        for i, clause in enumerate(self.clauses, 1):
            if not 1 <= len(clause) <= 3:
                out.append(f"clause {i} has {len(clause)} literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    out.append(f"clause {i}: literal {lit} out of range")
                used.add(abs(lit))
        missing = sorted(set(range(1, self.variable_count + 1)) - used)
        if missing:
            out.append(f"variables {missing} occur in no clause")
        return out

    @property
    def literal_count(self) -> int:
        return sum(len(c) for c in self.clauses)

    def __str__(self) -> str:
        def lit(l):
            return f"x{l}" if l > 0 else f"~x{-l}"

        return " & ".join("(" + " | ".join(lit(l) for l in c) + ")" for c in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF (``p cnf m r`` header, 0-terminated clauses)."""
    header = None
    literals: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: bad header {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise ValueError(f"line {lineno}: clause before 'p cnf' header")
        try:
            literals.extend(int(x) for x in line.split())
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer literal in {line!r}") from None
    if header is None:
        raise ValueError("missing 'p cnf' header")
    clauses, cur = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(lit)
    if cur:
        clauses.append(tuple(cur))
    m, r = header
    if len(clauses) != r:
        raise ValueError(f"header announces {r} clauses, found {len(clauses)}")
    return CnfFormula(m, tuple(clauses))


def write_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.variable_count} {len(formula.clauses)}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in formula.clauses]
    return "\n".join(lines) + "\n"


def gen_from_cnf(formula: CnfFormula) -> GameArena:
    """Arena whose verification instance is positive iff ``formula`` is unsatisfiable.

    Layout: ``v0 -> v1`` enters a valuation loop (``x_k`` or ``~x_k`` for
    each variable, joined by junction vertices, back to ``v1``) and
    ``v0 -> v2 -> s_i`` enters one such loop per clause ``i``.
    Objectives: ``(all, x_1, ~x_1, ..., x_m, ~x_m, lit_{1,1}, ..., lit_{r,*})``
    with maximum priority 2 throughout.
    """
    m = formula.variable_count
    lits = [(i, lit) for i, clause in enumerate(formula.clauses) for lit in clause]
    t = 1 + 2 * m + len(lits)

    owner: list[int] = []
    succ: list[list[int]] = []
    prios: list[list[int]] = []
    labels: list[str] = []

    def vertex(label: str) -> int:
        owner.append(1)
        succ.append([])
        prios.append([2] * (t + 1))
        labels.append(label)
        return len(owner) - 1

    def var_obj(k: int, positive: bool) -> int:
        return 2 * k if positive else 2 * k + 1

    def valuation_loop(head: int, tag: str, in_g2: bool):
        """x/~x diamonds chained from ``head`` back to ``head``."""
        prev = [head]
        for k in range(1, m + 1):
            pos, neg = vertex(f"{tag}x{k}"), vertex(f"{tag}~x{k}")
            join = vertex(f"{tag}j{k}")
            for u in prev:
                succ[u] += [pos, neg]
            succ[pos].append(join)
            succ[neg].append(join)
            prios[neg][var_obj(k, True)] = 1
            prios[pos][var_obj(k, False)] = 1
            if not in_g2:
                for j, (_, lit) in enumerate(lits):
                    if abs(lit) == k:
                        # the vertex of the opposite literal makes it fail
                        prios[neg if lit > 0 else pos][2 + 2 * m + j] = 1
                for v in (pos, neg, join):
                    prios[v][0] = prios[v][1] = 1
            prev = [join]
        succ[prev[0]].append(head)

    v0 = vertex("v0")
    v1 = vertex("v1")
    prios[v0][0] = prios[v0][1] = 1
    prios[v1][0] = prios[v1][1] = 1
    valuation_loop(v1, "", in_g2=False)
    v2 = vertex("v2")
    succ[v0] += [v1, v2]
    for i in range(len(formula.clauses)):
        s = vertex(f"s{i + 1}")
        succ[v2].append(s)
        for j, (ci, _) in enumerate(lits):
            if ci == i:
                prios[s][2 + 2 * m + j] = 1
        valuation_loop(s, f"s{i + 1}.", in_g2=True)

    return GameArena(owner, succ, v0, prios, max_priority=[2] * (t + 1), labels=labels)
