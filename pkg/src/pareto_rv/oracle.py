"""Brute-force reference semantics for small arenas.

Inf-sets are enumerated directly as vertex subsets (bitmasks), without going
through acceptance formulas or the emptiness engine.  Used as a referee in
tests; exponential in the arena size.
"""

from __future__ import annotations

from itertools import product as _cartesian

from .arena import GameArena, lasso_through
from .lattice import Antichain, Payoff

__all__ = [
    "OracleCapError",
    "DEFAULT_CAP",
    "enumerate_inf_sets",
    "oracle_realizable",
    "oracle_verify",
    "oracle_check_formula",
    "cnf_satisfiable",
]

DEFAULT_CAP = 16


class OracleCapError(ValueError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _closure(adj: list[int], start: int, within: int) -> int:
    """Vertices reachable from ``start`` (inclusive) inside ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def enumerate_inf_sets(arena: GameArena, cap: int = DEFAULT_CAP) -> list[frozenset[int]]:
    """Every vertex set that is the inf-set of some play.

    A set qualifies iff it is reachable, strongly connected and contains an
    internal edge.
    """
    n = arena.vertex_count
    if n > cap:
        raise OracleCapError(f"{n} vertices exceed the oracle cap of {cap}")
    adj = [0] * n
    radj = [0] * n
    for v, ws in enumerate(arena.successors):
        for w in ws:
            adj[v] |= 1 << w
            radj[w] |= 1 << v
    full = (1 << n) - 1
    reach = _closure(adj, arena.initial, full)
    fwd = {v: _closure(adj, v, reach) for v in _bits(reach)}

    # group reachable vertices by mutual reachability; inf-sets live in one group
    groups = []
    left = reach
    while left:
        v = (left & -left).bit_length() - 1
        group = 0
        for u in _bits(fwd[v]):
            if fwd[u] >> v & 1:
                group |= 1 << u
        groups.append(group)
        left &= ~group

    found = []
    for group in groups:
        members = _bits(group)
        for choice in _cartesian((0, 1), repeat=len(members)):
            S = 0
            for bit, v in zip(choice, members):
                if bit:
                    S |= 1 << v
            if not S:
                continue
            v = (S & -S).bit_length() - 1
            if S == 1 << v:
                if adj[v] >> v & 1:
                    found.append(frozenset([v]))
                continue
            if _closure(adj, v, S) == S and _closure(radj, v, S) == S:
                found.append(frozenset(_bits(S)))
    found.sort(key=lambda s: (len(s), sorted(s)))
    return found


def _inf_set_payoff(arena: GameArena, S) -> tuple[int, Payoff]:
    bits = []
    for i in range(len(arena.max_priority)):
        lowest = min(arena.priorities[v][i] for v in S)
        bits.append(1 if lowest % 2 == 0 else 0)
    return bits[0], tuple(bits[1:])


def oracle_realizable(arena: GameArena, cap: int = DEFAULT_CAP) -> set[tuple[int, Payoff]]:
    """Every realizable extended payoff ``(won, payoff)``."""
    return {_inf_set_payoff(arena, S) for S in enumerate_inf_sets(arena, cap)}


def oracle_verify(arena: GameArena, cap: int = DEFAULT_CAP):
    """Verdict by enumeration; returns a ``VerificationResult``."""
    from .verifier import VerificationResult

    sets = enumerate_inf_sets(arena, cap)
    payoffs = {S: _inf_set_payoff(arena, S) for S in sets}
    pareto = Antichain(p for _, p in payoffs.values())
    for S in sets:
        won, p = payoffs[S]
        if not won and p in pareto:
            return VerificationResult(
                positive=False, algorithm="oracle",
                counterexample=lasso_through(arena, S), antichain=pareto,
            )
    return VerificationResult(positive=True, algorithm="oracle", certificate=pareto, antichain=pareto)


def oracle_check_formula(arena: GameArena, f, cap: int = DEFAULT_CAP) -> bool:
    """Does some inf-set satisfy the acceptance formula ``f``?"""
    from .acceptance import eval_on_inf_set

    return any(eval_on_inf_set(arena, f, S) for S in enumerate_inf_sets(arena, cap))


def cnf_satisfiable(formula) -> bool:
    """Truth-table satisfiability of a ``CnfFormula``."""
    m = formula.variable_count
    for values in _cartesian((False, True), repeat=m):
        if all(any(values[abs(l) - 1] == (l > 0) for l in clause) for clause in formula.clauses):
            return True
    return False
