"""Existence of plays satisfying an acceptance condition.

The generic engine refines strongly connected components recursively: inside
a component, atoms over absent marks are folded away; if the component
itself satisfies the residual condition it is accepted, if even the most
optimistic reading fails it is pruned, and otherwise the lowest ``Fin`` mark
is split on -- (a) drop the vertices carrying it and re-decompose, then
(b) keep the component and treat the mark as seen infinitely often.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .acceptance import (
    FALSE,
    Formula,
    Mark,
    StreettPair,
    marks_of,
    streett_satisfied,
)
from .arena import ArenaError, GameArena, Lasso, check_lasso, lasso_through
from .lattice import Payoff, format_extended

__all__ = [
    "EmptinessStats",
    "sccs",
    "reachable_sccs",
    "is_nontrivial",
    "check",
    "streett_check",
    "extended_payoff",
    "witness_to_play_report",
    "PlayReport",
]


@dataclass
class EmptinessStats:
    calls: int = 0
    branches: int = 0
    components: int = 0
    max_depth: int = 0


def sccs(arena: GameArena, restrict: Iterable[int] | None = None) -> list[list[int]]:
    """Strongly connected components of the subgraph induced by ``restrict``.

    Iterative Tarjan.  Components are sorted internally and listed by their
    smallest vertex id.
    """
    if restrict is None:
        nodes = range(arena.vertex_count)
        allowed = None
    else:
        nodes = sorted(restrict)
        allowed = set(nodes)
    succ = arena.successors
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if allowed is not None and w not in allowed:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    pushed = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if pushed:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                out.append(comp)
    out.sort(key=lambda c: c[0])
    return out


def is_nontrivial(arena: GameArena, component: Sequence[int]) -> bool:
    """Can a play stay forever inside ``component``?"""
    return len(component) > 1 or arena.has_self_loop(component[0])


_TOP_LEVEL: "weakref.WeakKeyDictionary[GameArena, list[list[int]]]" = weakref.WeakKeyDictionary()


def reachable_sccs(arena: GameArena) -> list[list[int]]:
    """Nontrivial components of the reachable part, cached per arena."""
    comps = _TOP_LEVEL.get(arena)
    if comps is None:
        comps = [c for c in sccs(arena, arena.reachable()) if is_nontrivial(arena, c)]
        _TOP_LEVEL[arena] = comps
    return comps


def _require_single_player(arena: GameArena) -> None:
    if not arena.single_player:
        raise ArenaError("emptiness checks need a single-player arena; build a product first")


def check(arena: GameArena, f: Formula, stats: EmptinessStats | None = None) -> Lasso | None:
    """A lasso whose inf-set satisfies ``f``, or None if no play does."""
    _require_single_player(arena)
    if stats is None:
        stats = EmptinessStats()
    stats.calls += 1
    if f == FALSE:
        return None
    singleton_cache: dict[tuple[int, ...], bool] = {}
    for comp in reachable_sccs(arena):
        found = _search(arena, comp, f, stats, singleton_cache, 1)
        if found is not None:
            w = lasso_through(arena, found)
            assert f.evaluate(marks_of(arena, w.cycle)), "unsound emptiness witness"
            return w
    return None


def _search(
    arena: GameArena,
    comp: list[int],
    f: Formula,
    stats: EmptinessStats,
    singleton_cache: dict,
    depth: int,
) -> list[int] | None:
    stats.components += 1
    if depth > stats.max_depth:
        stats.max_depth = depth
    if len(comp) == 1:
        # the only candidate inf-set is the vertex itself
        key = arena.priorities[comp[0]]
        # at depth 1 the formula is the caller's, so priorities are a sound key
        hit = singleton_cache.get(key) if depth == 1 else None
        if hit is None:
            hit = f.evaluate(marks_of(arena, comp))
            if depth == 1:
                singleton_cache[key] = hit
        return comp if hit else None

    g = f.restrict(marks_of(arena, comp))
    if not g.value(True, True):
        return None
    if g.value(True, False):
        return comp
    fins = g.fin_marks()
    # a Fin-free residual is decided by the two evaluations above
    assert fins, g
    m = min(fins)
    stats.branches += 1

    rest = [v for v in comp if arena.priorities[v][m.objective] != m.priority]
    g_avoid = g.assign_fin(m, True)
    for sub in sccs(arena, rest):
        if is_nontrivial(arena, sub):
            found = _search(arena, sub, g_avoid, stats, singleton_cache, depth + 1)
            if found is not None:
                return found
    return _search(arena, comp, g.assign_fin(m, False), stats, singleton_cache, depth + 1)


def streett_check(
    arena: GameArena, pairs: Sequence[StreettPair], stats: EmptinessStats | None = None
) -> Lasso | None:
    """A lasso satisfying every Streett pair, or None.

    Components violating a pair (``F`` hit, ``E`` missed) lose their
    ``F``-vertices and are decomposed again.
    """
    _require_single_player(arena)
    if stats is None:
        stats = EmptinessStats()
    stats.calls += 1
    pending = list(reversed(reachable_sccs(arena)))
    while pending:
        comp = pending.pop()
        stats.components += 1
        if len(comp) == 1:
            v = comp[0]
            if all(v not in F or v in E for E, F in pairs):
                return lasso_through(arena, comp)
            continue
        cset = set(comp)
        drop: set[int] = set()
        for E, F in pairs:
            if not cset.isdisjoint(F) and cset.isdisjoint(E):
                drop |= F
        if not drop:
            w = lasso_through(arena, comp)
            assert streett_satisfied(pairs, w.cycle)
            return w
        stats.branches += 1
        subs = [c for c in sccs(arena, cset - drop) if is_nontrivial(arena, c)]
        pending.extend(reversed(subs))
    return None


def _min_even(prios: Iterable[int]) -> int:
    return int(min(prios) % 2 == 0)


def extended_payoff(arena: GameArena, inf_set: Iterable[int]) -> tuple[int, Payoff]:
    """Won-bit and payoff of any play whose inf-set is ``inf_set``."""
    S = list(inf_set)
    bits = [_min_even(arena.priorities[v][i] for v in S) for i in range(len(arena.max_priority))]
    return bits[0], tuple(bits[1:])


@dataclass
class PlayReport:
    won: int
    payoff: Payoff
    trace: str
    lasso: Lasso = field(repr=False)

    @property
    def extended(self) -> str:
        return format_extended(self.won, self.payoff)

    def __str__(self) -> str:
        return f"{self.trace}  {self.extended}"


def witness_to_play_report(arena: GameArena, w: Lasso) -> PlayReport:
    """Extended payoff of ``w`` and a ``prefix (cycle)^ω`` rendering."""
    check_lasso(arena, w)
    won, p = extended_payoff(arena, w.cycle)
    prefix = " ".join(arena.label(v) for v in w.prefix)
    loop = " ".join(arena.label(v) for v in w.cycle)
    trace = f"{prefix} ({loop})^ω" if prefix else f"({loop})^ω"
    return PlayReport(won=won, payoff=p, trace=trace, lasso=w)
