"""Acceptance conditions over per-objective priority marks.

A mark ``(i, p)`` is carried by every vertex whose objective-``i`` priority is
``p``.  Conditions are positive Boolean combinations of ``Inf(mark)`` ("some
vertex carrying the mark is visited infinitely often") and ``Fin(mark)``
("no such vertex is").  There is no negation node: complements are built by
duality, so every formula stays in positive normal form.

Constant folding happens in the :func:`conj` / :func:`disj` constructors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .arena import GameArena
from .lattice import Antichain, Payoff

__all__ = [
    "Mark",
    "Formula",
    "Const",
    "Inf",
    "Fin",
    "And",
    "Or",
    "TRUE",
    "FALSE",
    "conj",
    "disj",
    "dual",
    "marks_of",
    "eval_on_inf_set",
    "parity_formula",
    "payoff_eq_formula",
    "payoff_geq_formula",
    "extended_formula",
    "not_strictly_below_formula",
    "StreettPair",
    "parity_streett_pairs",
    "conjunction_to_streett",
    "streett_satisfied",
]


class Mark(NamedTuple):
    objective: int
    priority: int

    def __str__(self) -> str:
        return f"{self.objective}:{self.priority}"


class Formula:
    """Base class of acceptance formulas (immutable, hashable)."""

    __slots__ = ()

    def evaluate(self, marks: frozenset | set) -> bool:
        """Truth value when exactly ``marks`` are seen infinitely often."""
        raise NotImplementedError

    def restrict(self, present: frozenset | set) -> "Formula":
        """Fold atoms over marks outside ``present`` (Inf -> False, Fin -> True)."""
        raise NotImplementedError

    def value(self, inf: bool, fin: bool) -> bool:
        """Truth value when every Inf atom is ``inf`` and every Fin atom ``fin``."""
        raise NotImplementedError

    def assign_fin(self, mark: Mark, val: bool) -> "Formula":
        raise NotImplementedError

    def fin_marks(self) -> set[Mark]:
        raise NotImplementedError

    def atoms(self) -> set[Mark]:
        raise NotImplementedError

    def size(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Const(Formula):
    truth: bool

    __slots__ = ("truth",)

    def evaluate(self, marks):
        return self.truth

    def restrict(self, present):
        return self

    def value(self, inf, fin):
        return self.truth

    def assign_fin(self, mark, val):
        return self

    def fin_marks(self):
        return set()

    def atoms(self):
        return set()

    def size(self):
        return 1

    def __str__(self):
        return "t" if self.truth else "f"


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True)
class Inf(Formula):
    mark: Mark

    __slots__ = ("mark",)

    def evaluate(self, marks):
        return self.mark in marks

    def restrict(self, present):
        return self if self.mark in present else FALSE

    def value(self, inf, fin):
        return inf

    def assign_fin(self, mark, val):
        return self

    def fin_marks(self):
        return set()

    def atoms(self):
        return {self.mark}

    def size(self):
        return 1

    def __str__(self):
        return f"Inf({self.mark})"


@dataclass(frozen=True)
class Fin(Formula):
    mark: Mark

    __slots__ = ("mark",)

    def evaluate(self, marks):
        return self.mark not in marks

    def restrict(self, present):
        return self if self.mark in present else TRUE

    def value(self, inf, fin):
        return fin

    def assign_fin(self, mark, val):
        if mark == self.mark:
            return TRUE if val else FALSE
        return self

    def fin_marks(self):
        return {self.mark}

    def atoms(self):
        return {self.mark}

    def size(self):
        return 1

    def __str__(self):
        return f"Fin({self.mark})"


@dataclass(frozen=True)
class And(Formula):
    args: tuple[Formula, ...]

    __slots__ = ("args",)

    def evaluate(self, marks):
        return all(a.evaluate(marks) for a in self.args)

    def restrict(self, present):
        return conj(*(a.restrict(present) for a in self.args))

    def value(self, inf, fin):
        return all(a.value(inf, fin) for a in self.args)

    def assign_fin(self, mark, val):
        return conj(*(a.assign_fin(mark, val) for a in self.args))

    def fin_marks(self):
        return set().union(*(a.fin_marks() for a in self.args))

    def atoms(self):
        return set().union(*(a.atoms() for a in self.args))

    def size(self):
        return 1 + sum(a.size() for a in self.args)

    def __str__(self):
        return " & ".join(_wrap(a, Or) for a in self.args)


@dataclass(frozen=True)
class Or(Formula):
    args: tuple[Formula, ...]

    __slots__ = ("args",)

    def evaluate(self, marks):
        return any(a.evaluate(marks) for a in self.args)

    def restrict(self, present):
        return disj(*(a.restrict(present) for a in self.args))

    def value(self, inf, fin):
        return any(a.value(inf, fin) for a in self.args)

    def assign_fin(self, mark, val):
        return disj(*(a.assign_fin(mark, val) for a in self.args))

    def fin_marks(self):
        return set().union(*(a.fin_marks() for a in self.args))

    def atoms(self):
        return set().union(*(a.atoms() for a in self.args))

    def size(self):
        return 1 + sum(a.size() for a in self.args)

    def __str__(self):
        return " | ".join(_wrap(a, And) for a in self.args)


def _wrap(f: Formula, other: type) -> str:
    return f"({f})" if isinstance(f, other) else str(f)


def conj(*args: Formula) -> Formula:
    flat: list[Formula] = []
    for a in args:
        if a == FALSE:
            return FALSE
        if a == TRUE:
            continue
        if isinstance(a, And):
            flat.extend(a.args)
        elif a not in flat:
            flat.append(a)
    if not flat:
        return TRUE
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def disj(*args: Formula) -> Formula:
    flat: list[Formula] = []
    for a in args:
        if a == TRUE:
            return TRUE
        if a == FALSE:
            continue
        if isinstance(a, Or):
            flat.extend(a.args)
        elif a not in flat:
            flat.append(a)
    if not flat:
        return FALSE
    if len(flat) == 1:
        return flat[0]
    return Or(tuple(flat))


def dual(f: Formula) -> Formula:
    """The negation of ``f``, pushed to the atoms (Inf <-> Fin, And <-> Or)."""
    if isinstance(f, Const):
        return FALSE if f.truth else TRUE
    if isinstance(f, Inf):
        return Fin(f.mark)
    if isinstance(f, Fin):
        return Inf(f.mark)
    if isinstance(f, And):
        return disj(*(dual(a) for a in f.args))
    return conj(*(dual(a) for a in f.args))


def marks_of(arena: GameArena, vertices: Iterable[int]) -> frozenset[Mark]:
    """All marks carried by ``vertices``."""
    out = set()
    for v in vertices:
        for i, c in enumerate(arena.priorities[v]):
            out.add(Mark(i, c))
    return frozenset(out)


def eval_on_inf_set(arena: GameArena, f: Formula, inf_set: Iterable[int]) -> bool:
    return f.evaluate(marks_of(arena, inf_set))


# -- formula builders ---------------------------------------------------------


def parity_formula(arena: GameArena, objective: int, complement: bool = False) -> Formula:
    """Min-even parity condition of ``objective`` (or its complement).

    ``Inf(i:0) | (Fin(i:1) & (Inf(i:2) | ...))`` up to the padded maximum.
    The complement is the dual formula, which agrees with shifting every
    priority by one.
    """
    d = arena.max_priority[objective]
    f: Formula = Inf(Mark(objective, d))
    for p in range(d - 1, -1, -1):
        m = Mark(objective, p)
        f = disj(Inf(m), f) if p % 2 == 0 else conj(Fin(m), f)
    return dual(f) if complement else f


def payoff_eq_formula(arena: GameArena, p: Payoff) -> Formula:
    """Plays whose payoff is exactly ``p``."""
    _check_length(arena, p)
    return conj(*(parity_formula(arena, i + 1, complement=not b) for i, b in enumerate(p)))


def payoff_geq_formula(arena: GameArena, p: Payoff) -> Formula:
    """Plays whose payoff is at least ``p``."""
    _check_length(arena, p)
    return conj(*(parity_formula(arena, i + 1) for i, b in enumerate(p) if b))


def extended_formula(arena: GameArena, won: int, p: Payoff, mode: str = "eq") -> Formula:
    """Plays with won-bit ``won`` and payoff ``= p`` (``mode="eq"``) or ``>= p``."""
    if mode == "eq":
        base = payoff_eq_formula(arena, p)
    elif mode == "geq":
        base = payoff_geq_formula(arena, p)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return conj(parity_formula(arena, 0, complement=not won), base)


def not_strictly_below_formula(
    arena: GameArena, A: Iterable[Payoff], lost_only: bool = False
) -> Formula:
    """Plays whose payoff lies strictly below no element of ``A``.

    For each ``a`` in ``A`` the play either meets every objective set in
    ``a`` (payoff ``>= a``) or meets an objective clear in ``a`` (payoff not
    ``<= a``).  With ``lost_only`` the system objective must fail as well.
    """
    parts = []
    for a in sorted(A):
        _check_length(arena, a)
        ones = conj(*(parity_formula(arena, i + 1) for i, b in enumerate(a) if b))
        zeros = disj(*(parity_formula(arena, i + 1) for i, b in enumerate(a) if not b))
        parts.append(disj(ones, zeros))
    if lost_only:
        parts.append(parity_formula(arena, 0, complement=True))
    return conj(*parts)


def _check_length(arena: GameArena, p: Sequence[int]) -> None:
    if len(p) != arena.objective_count:
        raise ValueError(
            f"payoff of length {len(p)} for an arena with {arena.objective_count} objectives"
        )


# -- Streett encoding ---------------------------------------------------------


class StreettPair(NamedTuple):
    """Infinitely many visits to ``F`` require infinitely many visits to ``E``."""

    E: frozenset[int]
    F: frozenset[int]


def parity_streett_pairs(
    arena: GameArena, conjuncts: Iterable[tuple[int, bool]]
) -> list[StreettPair]:
    """Streett pairs for a conjunction of parity conditions.

    ``conjuncts`` lists ``(objective, complemented)``.  A complemented
    objective is handled through its priorities shifted by one.  For every
    odd (shifted) priority ``o`` the pair is (priorities ``< o``, priority
    ``o``).
    """
    pairs = []
    for i, complemented in conjuncts:
        shift = 1 if complemented else 0
        d = arena.max_priority[i] + shift
        by_priority: dict[int, set[int]] = {}
        for v, ps in enumerate(arena.priorities):
            by_priority.setdefault(ps[i] + shift, set()).add(v)
        smaller: set[int] = set()
        for c in range(d + 1):
            here = by_priority.get(c, set())
            if c % 2 == 1:
                pairs.append(StreettPair(frozenset(smaller), frozenset(here)))
            smaller |= here
    return pairs


def conjunction_to_streett(
    arena: GameArena, p: Payoff, mode: str = "geq", won: int | None = None
) -> list[StreettPair]:
    """Streett pairs for payoff ``>= p`` (default) or ``= p``.

    ``won`` optionally conjoins the system objective (``won=1``) or its
    complement (``won=0``).
    """
    _check_length(arena, p)
    if mode == "geq":
        conjuncts = [(i + 1, False) for i, b in enumerate(p) if b]
    elif mode == "eq":
        conjuncts = [(i + 1, not b) for i, b in enumerate(p)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if won is not None:
        conjuncts.insert(0, (0, not won))
    return parity_streett_pairs(arena, conjuncts)


def streett_satisfied(pairs: Iterable[StreettPair], inf_set: Iterable[int]) -> bool:
    S = set(inf_set)
    return all(S.isdisjoint(F) or not S.isdisjoint(E) for E, F in pairs)
