"""Decision procedures for Pareto-rational verification.

Given a single-player arena, the question is whether every play whose payoff
is Pareto-optimal is won by the system.  Three procedures are provided:

* :func:`naive_verify` computes the Pareto set by testing all ``2^t``
  payoffs, then looks for a lost play with a Pareto-optimal payoff;
* :func:`antichain_verify` descends the lattice level by level from the top
  payoff, stopping as soon as a lost Pareto-optimal play shows up;
* :func:`counterexample_verify` grows an under-approximation of the Pareto
  set from lost plays that are not yet explained away.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from .arena import GameArena, Lasso
from .emptiness import EmptinessStats
from .lattice import Antichain, Payoff, all_payoffs, one_bit_down, one_bit_up, top
from .realizability import (
    exists_extended,
    exists_lost_not_below,
    exists_payoff_eq,
    exists_payoff_geq,
    lasso_payoff,
)

__all__ = [
    "VerifierStats",
    "VerificationResult",
    "compute_pareto_set",
    "pareto_front",
    "naive_verify",
    "antichain_verify",
    "counterexample_verify",
    "check_certificate",
    "verify",
    "ALGORITHMS",
]


@dataclass
class VerifierStats:
    iterations: int = 0
    emptiness_calls: int = 0
    peak_antichain: int = 0
    wall_time: float = 0.0
    # antichain size and duration of the lost-play query, per iteration
    antichain_sizes: list[int] = field(default_factory=list)
    call_times: list[float] = field(default_factory=list)
    emptiness: EmptinessStats = field(default_factory=EmptinessStats, repr=False)


@dataclass
class VerificationResult:
    positive: bool
    algorithm: str
    counterexample: Lasso | None = None
    certificate: Antichain | None = None
    antichain: Antichain | None = None
    history: list[frozenset] = field(default_factory=list, repr=False)
    stats: VerifierStats = field(default_factory=VerifierStats)

    @property
    def verdict(self) -> str:
        return "positive" if self.positive else "negative"


class _Run:
    def __init__(self, algorithm: str):
        self.algorithm = algorithm
        self.stats = VerifierStats()
        self._start = time.perf_counter()

    def finish(self, positive: bool, **kw) -> VerificationResult:
        self.stats.wall_time = time.perf_counter() - self._start
        self.stats.emptiness_calls = self.stats.emptiness.calls
        return VerificationResult(positive=positive, algorithm=self.algorithm, stats=self.stats, **kw)


def compute_pareto_set(arena: GameArena, stats: EmptinessStats | None = None) -> Antichain:
    """Pareto-optimal payoffs, by testing every payoff for an exact realization."""
    return Antichain(
        p for p in all_payoffs(arena.objective_count) if exists_payoff_eq(arena, p, stats) is not None
    )


def pareto_front(arena: GameArena) -> Antichain:
    """Pareto-optimal payoffs by the top-down lattice descent (no early stop)."""
    return _descend(arena, _Run("descent"), stop_on_lost=False).antichain


def naive_verify(arena: GameArena) -> VerificationResult:
    run = _Run("naive")
    est = run.stats.emptiness
    pareto = compute_pareto_set(arena, est)
    run.stats.peak_antichain = len(pareto)
    for p in pareto:
        run.stats.iterations += 1
        w = exists_extended(arena, 0, p, "eq", est)
        if w is not None:
            return run.finish(False, counterexample=w, antichain=pareto)
    return run.finish(True, certificate=pareto, antichain=pareto)


def antichain_verify(arena: GameArena) -> VerificationResult:
    return _descend(arena, _Run("antichain"), stop_on_lost=True)


def _descend(arena: GameArena, run: _Run, stop_on_lost: bool) -> VerificationResult:
    # Level order guarantees that when p is tested, every realizable payoff
    # strictly above p is already dominated by A; p is not, so no realizable
    # payoff exceeds p and "= p" can be tested as ">= p".
    st = run.stats
    t = arena.objective_count
    A = Antichain()
    start = top(t)
    queue = deque([start])
    seen = {start}
    counterexample = None
    while queue:
        p = queue.popleft()
        st.iterations += 1
        if A.strictly_dominates(p):
            continue
        if exists_payoff_geq(arena, p, st.emptiness) is not None:
            A.add(p)
            st.antichain_sizes.append(len(A))
            st.peak_antichain = max(st.peak_antichain, len(A))
            if stop_on_lost:
                w = exists_extended(arena, 0, p, "geq", st.emptiness)
                if w is not None:
                    counterexample = w
                    break
        else:
            for q in one_bit_down(p):
                if q not in seen and not A.strictly_dominates(q):
                    seen.add(q)
                    queue.append(q)
    if counterexample is not None:
        return run.finish(False, counterexample=counterexample, antichain=A)
    return run.finish(True, certificate=A if stop_on_lost else None, antichain=A)


def counterexample_verify(arena: GameArena) -> VerificationResult:
    run = _Run("counterexample")
    st = run.stats
    A = Antichain()
    history = [A.frozen()]
    while True:
        st.iterations += 1
        st.antichain_sizes.append(len(A))
        t0 = time.perf_counter()
        rho = exists_lost_not_below(arena, A, st.emptiness)
        st.call_times.append(time.perf_counter() - t0)
        if rho is None:
            return run.finish(True, certificate=A, antichain=A, history=history)
        _, p = lasso_payoff(arena, rho)
        better = None
        for q in one_bit_up(p):
            better = exists_extended(arena, 1, q, "geq", st.emptiness)
            if better is not None:
                break
        if better is None:
            rho = _climb_lost(arena, rho, st.emptiness)
            return run.finish(False, counterexample=rho, antichain=A, history=history)
        _, p_better = lasso_payoff(arena, better)
        A.add(p_better)
        st.peak_antichain = max(st.peak_antichain, len(A))
        history.append(A.frozen())


def _climb_lost(arena: GameArena, rho: Lasso, stats: EmptinessStats) -> Lasso:
    """Replace the lost play ``rho`` by a lost play with Pareto-optimal payoff.

    Called once no won play beats ``rho``: every play with a larger payoff is
    then lost too, so climbing one bit at a time while some play reaches the
    next level ends on a maximal realizable payoff.  The verdict is already
    settled; this only makes the reported witness Pareto-optimal.
    """
    _, p = lasso_payoff(arena, rho)
    climbed = True
    while climbed:
        climbed = False
        for q in one_bit_up(p):
            w = exists_payoff_geq(arena, q, stats)
            if w is not None:
                rho, (_, p), climbed = w, lasso_payoff(arena, w), True
                break
    return rho


def check_certificate(arena: GameArena, A, stats: EmptinessStats | None = None) -> bool:
    """Every element of ``A`` is realizable and no lost play escapes ``A``."""
    A = list(A)
    if any(exists_payoff_eq(arena, p, stats) is None for p in A):
        return False
    return exists_lost_not_below(arena, A, stats) is None


ALGORITHMS = {
    "naive": naive_verify,
    "antichain": antichain_verify,
    "counterexample": counterexample_verify,
}


def verify(arena: GameArena, algorithm: str = "counterexample") -> VerificationResult:
    try:
        fn = ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; pick one of {sorted(ALGORITHMS)}") from None
    return fn(arena)
