"""Payoff realizability queries on single-player arenas."""

from __future__ import annotations

import os
from typing import Iterable

from . import acceptance as acc
from .arena import GameArena, Lasso
from .emptiness import EmptinessStats, check, extended_payoff, streett_check
from .lattice import Payoff, one_bit_up

__all__ = [
    "exists_payoff_eq",
    "exists_payoff_geq",
    "exists_extended",
    "is_pareto_optimal",
    "exists_lost_not_below",
    "lasso_payoff",
]

# Extra precondition checks that cost emptiness calls; enabled by PRV_DEBUG=1.
DEBUG = os.environ.get("PRV_DEBUG", "") not in ("", "0")


def lasso_payoff(arena: GameArena, w: Lasso) -> tuple[int, Payoff]:
    """(won-bit, payoff) of the play ``w``."""
    return extended_payoff(arena, w.cycle)


def exists_payoff_eq(arena: GameArena, p: Payoff, stats: EmptinessStats | None = None) -> Lasso | None:
    return check(arena, acc.payoff_eq_formula(arena, p), stats)


def exists_payoff_geq(arena: GameArena, p: Payoff, stats: EmptinessStats | None = None) -> Lasso | None:
    return streett_check(arena, acc.conjunction_to_streett(arena, p, "geq"), stats)


def exists_extended(
    arena: GameArena,
    won: int,
    p: Payoff,
    mode: str = "eq",
    stats: EmptinessStats | None = None,
) -> Lasso | None:
    """A play with won-bit ``won`` and payoff ``= p`` or ``>= p``.

    Both modes are conjunctions of parity conditions; ``geq`` goes through
    the Streett routine, ``eq`` through the generic engine.
    """
    if mode == "geq":
        return streett_check(arena, acc.conjunction_to_streett(arena, p, "geq", won=won), stats)
    return check(arena, acc.extended_formula(arena, won, p, mode), stats)


def is_pareto_optimal(arena: GameArena, p: Payoff, stats: EmptinessStats | None = None) -> bool:
    """Whether the realizable payoff ``p`` is maximal among realizable payoffs."""
    if DEBUG and exists_payoff_eq(arena, p) is None:
        raise ValueError(f"payoff {p} is not realizable")
    return all(exists_payoff_geq(arena, q, stats) is None for q in one_bit_up(p))


def exists_lost_not_below(
    arena: GameArena, A: Iterable[Payoff], stats: EmptinessStats | None = None
) -> Lasso | None:
    """A lost play whose payoff is strictly below no element of ``A``."""
    return check(arena, acc.not_strictly_below_formula(arena, A, lost_only=True), stats)
