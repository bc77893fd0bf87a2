"""Randomized algebraic laws, driven by hypothesis."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from autobasis.automaton import (
    Dfa,
    Nfa,
    complement,
    determinize,
    equivalent,
    intersect,
    minimize,
    minimize_by_reversal,
    reverse,
    union,
)
from autobasis.numeral import decode, encode, from_values, set_members
from autobasis.sumset import SumSpec, add_constant, count_representations, sum_automaton

from conftest import all_words

bases = st.integers(2, 4)


@st.composite
def dfas(draw, k=None, max_states=6):
    k = k if k is not None else draw(bases)
    n = draw(st.integers(1, max_states))
    rows = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k),
                         min_size=n, max_size=n))
    finals = draw(st.sets(st.integers(0, n - 1)))
    return Dfa.from_rows(k, rows, 0, finals)


@st.composite
def dfa_pairs(draw):
    k = draw(bases)
    return draw(dfas(k=k)), draw(dfas(k=k))


@st.composite
def nfas(draw):
    k = draw(bases)
    n = draw(st.integers(1, 5))
    edge = st.tuples(st.integers(0, n - 1), st.integers(0, k - 1), st.integers(0, n - 1))
    edges = draw(st.lists(edge, max_size=3 * n * k))
    initials = draw(st.sets(st.integers(0, n - 1), min_size=1))
    finals = draw(st.sets(st.integers(0, n - 1)))
    return Nfa.from_edges(k, n, edges, initials, finals)


def words(k):
    return list(all_words(k, 6 if k == 2 else 4))


@given(st.integers(0, 10**12), bases)
def test_encode_decode_round_trip(n, k):
    w = encode(n, k)
    assert decode(w, k) == n
    assert not w or w[-1] != 0


@given(dfas())
def test_minimize_keeps_language_and_is_canonical(a):
    m = minimize(a)
    assert m.n_states <= a.n_states
    assert all(m.accepts(w) == a.accepts(w) for w in words(a.k))
    assert minimize(m) == m
    assert minimize_by_reversal(a) == m


@given(nfas())
def test_determinize_keeps_language(a):
    d = determinize(a)
    assert all(d.accepts(w) == a.accepts(w) for w in words(a.k))


@given(nfas())
def test_reverse_reverses_words(a):
    r = reverse(a)
    assert all(r.accepts(w[::-1]) == a.accepts(w) for w in words(a.k))


@given(dfa_pairs())
def test_de_morgan(pair):
    a, b = pair
    assert equivalent(complement(union(a, b)), intersect(complement(a), complement(b)))
    assert equivalent(complement(intersect(a, b)), union(complement(a), complement(b)))


@given(dfa_pairs())
def test_equivalence_is_equality_of_minimal_machines(pair):
    a, b = pair
    same = all(a.accepts(w) == b.accepts(w) for w in words(a.k))
    if equivalent(a, b):
        assert same and minimize(a) == minimize(b)
    else:
        assert minimize(a) != minimize(b)


@given(bases, st.sets(st.integers(0, 200), max_size=12))
def test_from_values_accepts_exactly_those_values(k, values):
    assert set_members(from_values(values, k), 400) == sorted(values)


@settings(max_examples=40, deadline=None)
@given(bases, st.sets(st.integers(0, 60), min_size=1, max_size=6),
       st.sets(st.integers(0, 60), min_size=1, max_size=6))
def test_sum_of_finite_sets(k, xs, ys):
    spec = SumSpec([from_values(xs, k), from_values(ys, k)])
    expected = sorted({x + y for x in xs for y in ys})
    assert set_members(sum_automaton(spec), 130) == expected
    n = expected[len(expected) // 2]
    assert count_representations(n, spec) == sum(1 for x in xs for y in ys if x + y == n)


@settings(max_examples=40, deadline=None)
@given(bases, st.sets(st.integers(0, 100), max_size=8), st.integers(0, 50))
def test_add_constant(k, xs, c):
    shifted = add_constant(from_values(xs, k), c)
    assert set_members(shifted, 200) == sorted(x + c for x in xs)


@settings(max_examples=25, deadline=None)
@given(dfas(k=2, max_states=5))
def test_sum_automaton_matches_brute_force(a):
    bound = 300
    members = set_members(a, bound)
    spec = SumSpec([a, a])
    got = set(set_members(sum_automaton(spec), bound))
    mask = np.zeros(bound + 1, bool)
    for x in members:
        for y in members:
            if x + y <= bound:
                mask[x + y] = True
    assert got == set(np.nonzero(mask)[0].tolist())
