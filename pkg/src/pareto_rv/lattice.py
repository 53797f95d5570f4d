"""The Boolean payoff lattice ``({0,1}^t, <=)`` and antichains over it.

A payoff is a plain tuple of 0/1 ints, index ``i`` standing for environment
objective ``i + 1``.
"""

from __future__ import annotations

import enum
from itertools import product as _cartesian
from typing import Iterable, Iterator, Sequence

Payoff = tuple[int, ...]

__all__ = [
    "Payoff",
    "Order",
    "Domination",
    "Antichain",
    "payoff",
    "leq",
    "less",
    "ceil",
    "in_strict_down",
    "antichain_below",
    "one_bit_down",
    "one_bit_up",
    "top",
    "bottom",
    "all_payoffs",
    "format_payoff",
    "format_extended",
    "parse_payoff",
]


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class Domination(enum.Enum):
    STRICTLY_BELOW = "strictly_below"
    BELOW_OR_EQUAL = "below_or_equal"
    NEITHER = "neither"


def payoff(bits: Iterable[int | bool] | str) -> Payoff:
    """Coerce ``bits`` to a payoff; strings like ``"1011"`` are accepted."""
    if isinstance(bits, str):
        bits = [c for c in bits if c in "01"]
    p = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in p):
        raise ValueError(f"payoff entries must be 0 or 1: {p}")
    return p


def _same_length(p: Sequence[int], q: Sequence[int]) -> None:
    if len(p) != len(q):
        raise ValueError(f"payoff length mismatch: {len(p)} vs {len(q)}")


def leq(p: Payoff, q: Payoff) -> Order:
    """Componentwise comparison of two payoffs."""
    _same_length(p, q)
    below = all(a <= b for a, b in zip(p, q))
    above = all(a >= b for a, b in zip(p, q))
    if below and above:
        return Order.EQUAL
    if below:
        return Order.LESS
    if above:
        return Order.GREATER
    return Order.INCOMPARABLE


def less(p: Payoff, q: Payoff) -> bool:
    """``p < q``: componentwise ``<=`` and different."""
    return p != q and all(a <= b for a, b in zip(p, q))


def _le(p: Payoff, q: Payoff) -> bool:
    return all(a <= b for a, b in zip(p, q))


def ceil(payoffs: Iterable[Payoff]) -> "Antichain":
    """Maximal elements of a set of payoffs."""
    return Antichain(payoffs)


def in_strict_down(p: Payoff, A: Iterable[Payoff]) -> bool:
    """True iff some element of ``A`` is strictly larger than ``p``."""
    for a in A:
        _same_length(p, a)
        if less(p, a):
            return True
    return False


def antichain_below(A: Iterable[Payoff], B: Iterable[Payoff]) -> Domination:
    """Is every element of ``A`` below some element of ``B``?

    ``BELOW_OR_EQUAL`` is only reported for ``A == B``; any other dominated
    ``A`` is ``STRICTLY_BELOW``.
    """
    A, B = set(A), set(B)
    if not all(any(_le(a, b) for b in B) for a in A):
        return Domination.NEITHER
    return Domination.BELOW_OR_EQUAL if A == B else Domination.STRICTLY_BELOW


def one_bit_down(p: Payoff) -> list[Payoff]:
    """Payoffs obtained by clearing exactly one set bit, by ascending index."""
    return [p[:i] + (0,) + p[i + 1:] for i, b in enumerate(p) if b]


def one_bit_up(p: Payoff) -> list[Payoff]:
    """Payoffs obtained by setting exactly one clear bit, by ascending index."""
    return [p[:i] + (1,) + p[i + 1:] for i, b in enumerate(p) if not b]


def top(t: int) -> Payoff:
    return (1,) * t


def bottom(t: int) -> Payoff:
    return (0,) * t


def all_payoffs(t: int) -> Iterator[Payoff]:
    """Every payoff of length ``t``, from ``(0,..,0)`` to ``(1,..,1)``."""
    return _cartesian((0, 1), repeat=t)


def format_payoff(p: Payoff) -> str:
    return "(" + ",".join(str(b) for b in p) + ")"


def format_extended(won: int, p: Payoff) -> str:
    return f"{int(won)},{format_payoff(p)}"


def parse_payoff(text: str) -> Payoff:
    """Inverse of :func:`format_payoff`."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"not a payoff: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ()
    return payoff(int(x) for x in inner.split(","))


class Antichain:
    """A set of pairwise incomparable payoffs.

    ``add`` keeps the invariant at every step: a dominated insert is a no-op
    and an insert removes the elements it dominates.
    """

    __slots__ = ("_elements",)

    def __init__(self, payoffs: Iterable[Payoff] = ()):
        self._elements: set[Payoff] = set()
        for p in payoffs:
            self.add(p)

    def add(self, p: Payoff) -> bool:
        """Insert ``p``; return False when ``p`` is already dominated."""
        p = tuple(p)
        for a in self._elements:
            _same_length(p, a)
            if _le(p, a):
                return False
        self._elements = {a for a in self._elements if not _le(a, p)}
        self._elements.add(p)
        return True

    def strictly_dominates(self, p: Payoff) -> bool:
        """``p`` lies strictly below some element."""
        return in_strict_down(p, self._elements)

    def dominates(self, p: Payoff) -> bool:
        """``p`` lies below or on some element."""
        return any(_le(p, a) for a in self._elements)

    def below(self, other: Iterable[Payoff]) -> Domination:
        return antichain_below(self._elements, other)

    def copy(self) -> "Antichain":
        new = Antichain()
        new._elements = set(self._elements)
        return new

    def frozen(self) -> frozenset[Payoff]:
        return frozenset(self._elements)

    def sorted(self) -> list[Payoff]:
        return sorted(self._elements)

    def __iter__(self) -> Iterator[Payoff]:
        return iter(sorted(self._elements))

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, p: object) -> bool:
        return p in self._elements

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Antichain):
            return self._elements == other._elements
        if isinstance(other, (set, frozenset)):
            return self._elements == other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._elements))

    def __repr__(self) -> str:
        return "{" + ", ".join(format_payoff(p) for p in self) + "}"
