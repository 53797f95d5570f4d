import itertools

import pytest
from hypothesis import given, strategies as st

from pareto_rv.lattice import (
    Antichain,
    Domination,
    Order,
    all_payoffs,
    antichain_below,
    bottom,
    ceil,
    format_extended,
    format_payoff,
    in_strict_down,
    leq,
    less,
    one_bit_down,
    one_bit_up,
    parse_payoff,
    payoff,
    top,
)

T = 4
payoffs = st.tuples(*[st.integers(0, 1)] * T)
payoff_sets = st.sets(payoffs, max_size=10)


def brute_ceil(ps):
    ps = set(ps)
    return {p for p in ps if not any(less(p, q) for q in ps)}


def test_leq_orders():
    assert leq((0, 1), (1, 1)) is Order.LESS
    assert leq((1, 1), (0, 1)) is Order.GREATER
    assert leq((1, 0), (1, 0)) is Order.EQUAL
    assert leq((1, 0), (0, 1)) is Order.INCOMPARABLE


def test_length_mismatch_raises():
    with pytest.raises(ValueError):
        leq((0, 1), (0, 1, 1))


def test_payoff_coercion():
    assert payoff("1011") == (1, 0, 1, 1)
    assert payoff([True, False]) == (1, 0)
    with pytest.raises(ValueError):
        payoff([2, 0])


def test_one_bit_neighbours_in_ascending_index_order():
    assert one_bit_up((0, 1, 0)) == [(1, 1, 0), (0, 1, 1)]
    assert one_bit_down((1, 0, 1)) == [(0, 0, 1), (1, 0, 0)]
    assert one_bit_up(top(3)) == [] and one_bit_down(bottom(3)) == []


def test_all_payoffs_count():
    assert len(list(all_payoffs(5))) == 32


def test_format_and_parse():
    assert format_payoff((1, 0, 1, 1)) == "(1,0,1,1)"
    assert format_extended(0, (1, 1, 0, 0)) == "0,(1,1,0,0)"
    assert parse_payoff("(1,0,1,1)") == (1, 0, 1, 1)
    with pytest.raises(ValueError):
        parse_payoff("1,0")


def test_antichain_repr_is_sorted():
    A = Antichain([(1, 1, 0, 0), (1, 0, 1, 1)])
    assert repr(A) == "{(1,0,1,1), (1,1,0,0)}"


@given(payoff_sets)
def test_ceil_matches_brute_force(ps):
    assert set(ceil(ps)) == brute_ceil(ps)


@given(st.lists(payoffs, max_size=12))
def test_add_keeps_antichain_invariant(seq):
    A = Antichain()
    for p in seq:
        A.add(p)
        for a, b in itertools.combinations(A, 2):
            assert leq(a, b) is Order.INCOMPARABLE
    assert set(A) == brute_ceil(seq)


@given(payoff_sets, payoffs)
def test_add_reports_dominated_insert(ps, p):
    A = Antichain(ps)
    dominated = any(leq(p, a) in (Order.LESS, Order.EQUAL) for a in A)
    assert A.add(p) is (not dominated)


@given(payoff_sets, payoffs)
def test_strict_down(ps, p):
    assert in_strict_down(p, ps) == any(less(p, q) for q in ps)
    assert Antichain(ps).strictly_dominates(p) == in_strict_down(p, brute_ceil(ps))


@given(payoff_sets, payoff_sets)
def test_antichain_below(a, b):
    A, B = brute_ceil(a), brute_ceil(b)
    result = antichain_below(A, B)
    below = all(any(leq(x, y) in (Order.LESS, Order.EQUAL) for y in B) for x in A)
    if not below:
        assert result is Domination.NEITHER
    elif A == B:
        assert result is Domination.BELOW_OR_EQUAL
    else:
        assert result is Domination.STRICTLY_BELOW


def test_antichain_equality_with_sets():
    A = Antichain([(0, 1), (1, 0), (0, 0)])
    assert A == {(0, 1), (1, 0)}
    assert len(A) == 2 and (0, 0) not in A
