"""Game arenas, finite-memory strategies and ultimately periodic plays.

Vertices are dense integer ids ``0..n-1``.  Every vertex carries one priority
per objective: index 0 is the system's objective, indices ``1..t`` are the
environment's objectives.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "GameArena",
    "MooreMachine",
    "Lasso",
    "ArenaError",
    "StrategyIncompleteError",
    "InvalidLassoError",
    "validate",
    "product",
    "check_lasso",
    "lasso_inf_priorities",
    "lasso_through",
    "shortest_path",
]


class ArenaError(ValueError):
    pass


class StrategyIncompleteError(ArenaError):
    """The Moore machine has no move for a reachable Player-0 configuration."""


class InvalidLassoError(ArenaError):
    pass


def _pad_even(d: int) -> int:
    return d + (d % 2)


class GameArena:
    """A finite directed graph with an owner partition and priority vectors.

    The arena is lenient at construction time so that :func:`validate` can
    report every broken invariant; treat instances as immutable afterwards.

    Parameters
    ----------
    owner : sequence of 0/1, one entry per vertex.
    successors : sequence of successor lists, one per vertex (order is kept).
    initial : initial vertex id.
    priorities : sequence of priority vectors of length ``t + 1``.
    max_priority : declared per-objective maxima.  Computed from
        ``priorities`` when omitted.  Odd values are padded to the next even
        integer.
    labels : optional human readable vertex names.
    """

    def __init__(
        self,
        owner: Sequence[int],
        successors: Sequence[Sequence[int]],
        initial: int,
        priorities: Sequence[Sequence[int]],
        max_priority: Sequence[int] | None = None,
        labels: Sequence[str] | None = None,
    ):
        self.owner = tuple(int(o) for o in owner)
        self.successors = tuple(tuple(int(w) for w in ws) for ws in successors)
        self.initial = int(initial)
        self.priorities = tuple(tuple(int(c) for c in ps) for ps in priorities)
        if max_priority is None:
            width = len(self.priorities[0]) if self.priorities else 1
            max_priority = [
                max((ps[i] for ps in self.priorities if len(ps) > i), default=0)
                for i in range(width)
            ]
        self.max_priority = tuple(_pad_even(int(d)) for d in max_priority)
        self.labels = tuple(labels) if labels is not None else None
        self._reachable: frozenset[int] | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.owner)

    @property
    def objective_count(self) -> int:
        """Number ``t`` of environment objectives."""
        return len(self.max_priority) - 1

    @property
    def single_player(self) -> bool:
        return all(o == 1 for o in self.owner)

    def label(self, v: int) -> str:
        if self.labels is not None and self.labels[v]:
            return self.labels[v]
        return str(v)

    def has_self_loop(self, v: int) -> bool:
        return v in self.successors[v]

    def reachable(self) -> frozenset[int]:
        """Vertices reachable from the initial vertex (cached)."""
        if self._reachable is None:
            seen = {self.initial}
            todo = [self.initial]
            while todo:
                v = todo.pop()
                for w in self.successors[v]:
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            self._reachable = frozenset(seen)
        return self._reachable

    def __repr__(self) -> str:
        return (
            f"GameArena(vertices={self.vertex_count}, "
            f"objectives={self.objective_count}, initial={self.initial})"
        )


def validate(arena: GameArena) -> list[str]:
    """Return a description of every broken arena invariant (empty if valid)."""
    problems = []
    n = arena.vertex_count
    width = len(arena.max_priority)
    if n == 0:
        return ["arena has no vertices"]
    if width < 2:
        problems.append("at least one environment objective is required")
    if len(arena.successors) != n:
        problems.append(f"{len(arena.successors)} successor lists for {n} vertices")
    if len(arena.priorities) != n:
        problems.append(f"{len(arena.priorities)} priority vectors for {n} vertices")
    if not 0 <= arena.initial < n:
        problems.append(f"initial vertex {arena.initial} out of range")
    for v in range(n):
        if arena.owner[v] not in (0, 1):
            problems.append(f"vertex {v} has owner {arena.owner[v]}, expected 0 or 1")
        if v < len(arena.successors):
            succ = arena.successors[v]
            if not succ:
                problems.append(f"vertex {v} has no successor")
            for w in succ:
                if not 0 <= w < n:
                    problems.append(f"edge target {w} out of range")
        if v < len(arena.priorities):
            ps = arena.priorities[v]
            if len(ps) != width:
                problems.append(
                    f"vertex {v} has {len(ps)} priorities, expected {width}"
                )
                continue
            for i, c in enumerate(ps):
                if c < 0:
                    problems.append(f"vertex {v} objective {i}: negative priority {c}")
                elif c > arena.max_priority[i]:
                    problems.append(
                        f"vertex {v} objective {i}: priority {c} exceeds "
                        f"maximum {arena.max_priority[i]}"
                    )
    return problems


@dataclass(frozen=True)
class MooreMachine:
    """Finite-memory strategy for Player 0.

    ``update[(m, v)]`` is the memory state after reading arena vertex ``v`` in
    state ``m``; ``choice[(m, v)]`` is the successor picked at a Player-0
    vertex ``v`` once ``v`` has been read.
    """

    state_count: int
    initial_state: int
    update: Mapping[tuple[int, int], int]
    choice: Mapping[tuple[int, int], int]

    @classmethod
    def memoryless(cls, choice: Mapping[int, int], vertex_count: int) -> "MooreMachine":
        return cls(
            state_count=1,
            initial_state=0,
            update={(0, v): 0 for v in range(vertex_count)},
            choice={(0, v): w for v, w in choice.items()},
        )


def product(arena: GameArena, machine: MooreMachine) -> GameArena:
    """Single-player arena whose plays are the plays consistent with ``machine``.

    Only the reachable part of ``arena x machine`` is built.  Vertex ``(v, m)``
    inherits the priorities of ``v``; its label is ``"<v>@<m>"``.
    """

    def step(m: int, v: int) -> int:
        try:
            return machine.update[(m, v)]
        except KeyError:
            raise StrategyIncompleteError(
                f"no memory update for state {m} on vertex {v}"
            ) from None

    start = (arena.initial, step(machine.initial_state, arena.initial))
    index = {start: 0}
    order = [start]
    succ_lists: list[list[int]] = []
    i = 0
    while i < len(order):
        v, m = order[i]
        i += 1
        if arena.owner[v] == 0:
            try:
                w = machine.choice[(m, v)]
            except KeyError:
                raise StrategyIncompleteError(
                    f"no choice for state {m} at Player-0 vertex {v}"
                ) from None
            if w not in arena.successors[v]:
                raise StrategyIncompleteError(
                    f"choice {w} at vertex {v} (state {m}) is not a successor"
                )
            targets = [w]
        else:
            targets = list(arena.successors[v])
        row = []
        for w in targets:
            node = (w, step(m, w))
            if node not in index:
                index[node] = len(order)
                order.append(node)
            row.append(index[node])
        succ_lists.append(row)

    return GameArena(
        owner=[1] * len(order),
        successors=succ_lists,
        initial=0,
        priorities=[arena.priorities[v] for v, _ in order],
        max_priority=arena.max_priority,
        labels=[f"{arena.label(v)}@{m}" for v, m in order],
    )


@dataclass(frozen=True)
class Lasso:
    """The play ``prefix . cycle^omega``.

    The play starts at ``prefix[0]`` (or ``cycle[0]`` when the prefix is
    empty); the vertices visited infinitely often are exactly ``set(cycle)``.
    """

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))

    @property
    def inf_set(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def vertices(self) -> tuple[int, ...]:
        return self.prefix + self.cycle


def check_lasso(arena: GameArena, w: Lasso) -> None:
    """Raise :class:`InvalidLassoError` unless ``w`` is a play of ``arena``."""
    if not w.cycle:
        raise InvalidLassoError("empty cycle")
    path = w.prefix + w.cycle
    n = arena.vertex_count
    for v in path:
        if not 0 <= v < n:
            raise InvalidLassoError(f"vertex {v} out of range")
    if path[0] != arena.initial:
        raise InvalidLassoError(f"play starts at {path[0]}, not at {arena.initial}")
    for a, b in zip(path, path[1:]):
        if b not in arena.successors[a]:
            raise InvalidLassoError(f"missing edge ({a}, {b})")
    if w.cycle[0] not in arena.successors[w.cycle[-1]]:
        raise InvalidLassoError(f"cycle does not close: ({w.cycle[-1]}, {w.cycle[0]})")


def lasso_inf_priorities(arena: GameArena, w: Lasso, objective: int) -> set[int]:
    """Priorities of ``objective`` seen infinitely often along ``w``."""
    check_lasso(arena, w)
    return {arena.priorities[v][objective] for v in w.cycle}


def shortest_path(
    arena: GameArena, source: int, targets: Iterable[int], within: Iterable[int] | None = None
) -> list[int] | None:
    """BFS path from ``source`` to the nearest vertex of ``targets``.

    The path is a vertex list starting at ``source``.  When ``within`` is
    given, intermediate vertices are restricted to that set.  A path of
    length zero (``[source]``) is returned when ``source`` is a target.
    """
    goal = set(targets)
    allowed = None if within is None else set(within)
    if source in goal:
        return [source]
    parent = {source: source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in arena.successors[v]:
            if w in parent or (allowed is not None and w not in allowed):
                continue
            parent[w] = v
            if w in goal:
                path = [w]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(w)
    return None


def lasso_through(arena: GameArena, inf_set: Iterable[int]) -> Lasso:
    """Build a lasso whose cycle visits exactly the vertices of ``inf_set``.

    ``inf_set`` must be reachable from the initial vertex and strongly
    connected with at least one internal edge.
    """
    S = set(inf_set)
    if not S:
        raise InvalidLassoError("empty inf-set")
    stem = shortest_path(arena, arena.initial, S)
    if stem is None:
        raise InvalidLassoError("inf-set is not reachable")
    entry = stem[-1]
    if len(S) == 1:
        if not arena.has_self_loop(entry):
            raise InvalidLassoError(f"singleton {entry} has no self-loop")
        return Lasso(tuple(stem[:-1]), (entry,))

    cycle = [entry]
    pending = S - {entry}
    cur = entry
    while pending:
        path = shortest_path(arena, cur, pending, within=S)
        if path is None:
            raise InvalidLassoError("inf-set is not strongly connected")
        cycle.extend(path[1:])
        pending.difference_update(path)
        cur = path[-1]
    back = shortest_path(arena, cur, [entry], within=S)
    if back is None:
        raise InvalidLassoError("inf-set is not strongly connected")
    cycle.extend(back[1:-1])
    return Lasso(tuple(stem[:-1]), tuple(cycle))
