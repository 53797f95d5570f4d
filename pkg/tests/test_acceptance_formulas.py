"""Acceptance formulas and their Streett encodings (not the acceptance suite)."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st
from support import random_arena, random_formula

from pareto_rv import acceptance as acc
from pareto_rv.acceptance import Fin, Inf, Mark
from pareto_rv.arena import GameArena
from pareto_rv.emptiness import extended_payoff
from pareto_rv.lattice import all_payoffs, in_strict_down, less
from pareto_rv.oracle import enumerate_inf_sets

one_obj = GameArena([1], [[0]], 0, [(0, 0)], max_priority=[2, 2])


def test_parity_formula_shape():
    assert str(acc.parity_formula(one_obj, 1)) == "Inf(1:0) | (Fin(1:1) & Inf(1:2))"
    assert str(acc.parity_formula(one_obj, 1, complement=True)) == "Fin(1:0) & (Inf(1:1) | Fin(1:2))"


def test_constants_fold():
    m = Mark(0, 0)
    assert acc.conj(acc.TRUE, Inf(m)) == Inf(m)
    assert acc.conj(acc.FALSE, Inf(m)) == acc.FALSE
    assert acc.disj(acc.TRUE, Fin(m)) == acc.TRUE
    assert acc.disj(Inf(m), Inf(m)) == Inf(m)


def test_restrict_and_value():
    m0, m1 = Mark(0, 0), Mark(0, 1)
    f = acc.conj(Inf(m0), Fin(m1))
    g = f.restrict({m0})
    assert g == Inf(m0)
    assert f.restrict({m1}) == acc.FALSE
    assert f.value(inf=True, fin=True) and not f.value(inf=True, fin=False)
    assert f.fin_marks() == {m1}


@pytest.mark.parametrize("d", [0, 2, 4, 6])
def test_parity_formula_agrees_with_min_even(d):
    marks_for = lambda s: frozenset(Mark(1, c) for c in s)
    a = GameArena([1], [[0]], 0, [(0, 0)], max_priority=[d, d])
    f = acc.parity_formula(a, 1)
    g = acc.parity_formula(a, 1, complement=True)
    for k in range(1, d + 2):
        for seen in itertools.combinations(range(d + 1), k):
            even = min(seen) % 2 == 0
            assert f.evaluate(marks_for(seen)) == even
            assert g.evaluate(marks_for(seen)) == (not even)


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_dual_is_negation(seed):
    rng = random.Random(seed)
    a = random_arena(seed, max_vertices=4)
    f = random_formula(a, rng)
    g = acc.dual(f)
    atoms = sorted(f.atoms())
    for bits in itertools.product((0, 1), repeat=len(atoms)):
        marks = frozenset(m for m, b in zip(atoms, bits) if b)
        assert g.evaluate(marks) == (not f.evaluate(marks))


def _sets(seed):
    a = random_arena(seed, max_vertices=7)
    return a, enumerate_inf_sets(a)


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_payoff_formulas_match_inf_set_payoffs(seed):
    a, sets = _sets(seed)
    for S in sets:
        won, p = extended_payoff(a, S)
        for q in all_payoffs(a.objective_count):
            assert acc.eval_on_inf_set(a, acc.payoff_eq_formula(a, q), S) == (p == q)
            ge = all(x >= y for x, y in zip(p, q))
            assert acc.eval_on_inf_set(a, acc.payoff_geq_formula(a, q), S) == ge
            for w in (0, 1):
                assert acc.eval_on_inf_set(a, acc.extended_formula(a, w, q, "eq"), S) == (won == w and p == q)


@given(st.integers(0, 10_000), st.sets(st.integers(0, 15), max_size=4))
@settings(max_examples=60, deadline=None)
def test_not_strictly_below(seed, raw):
    a, sets = _sets(seed)
    t = a.objective_count
    A = {tuple((x >> i) & 1 for i in range(t)) for x in raw}
    A = {p for p in A if not any(less(p, q) for q in A)}
    f = acc.not_strictly_below_formula(a, A)
    g = acc.not_strictly_below_formula(a, A, lost_only=True)
    for S in sets:
        won, p = extended_payoff(a, S)
        assert acc.eval_on_inf_set(a, f, S) == (not in_strict_down(p, A))
        assert acc.eval_on_inf_set(a, g, S) == (not won and not in_strict_down(p, A))


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_streett_encoding_matches_formulas(seed):
    a, sets = _sets(seed)
    for q in all_payoffs(a.objective_count):
        for mode in ("geq", "eq"):
            for won in (None, 0, 1):
                pairs = acc.conjunction_to_streett(a, q, mode, won=won)
                if mode == "eq":
                    f = acc.payoff_eq_formula(a, q)
                else:
                    f = acc.payoff_geq_formula(a, q)
                if won is not None:
                    f = acc.conj(acc.parity_formula(a, 0, complement=not won), f)
                for S in sets:
                    assert acc.streett_satisfied(pairs, S) == acc.eval_on_inf_set(a, f, S)


def test_length_is_checked(intersection):
    with pytest.raises(ValueError):
        acc.payoff_eq_formula(intersection, (1, 0))
    with pytest.raises(ValueError):
        acc.conjunction_to_streett(intersection, (1, 0, 1))
