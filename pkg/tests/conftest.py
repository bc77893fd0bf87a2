import itertools

import numpy as np
import pytest

from autobasis.automaton import Dfa, Nfa


def all_words(k, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(k), repeat=n)


def random_dfa(rng, k, n, p_final=0.5):
    rows = rng.integers(0, n, size=(n, k))
    finals = [q for q in range(n) if rng.random() < p_final]
    return Dfa.from_rows(k, rows.tolist(), 0, finals)


def random_nfa(rng, k, n, density=0.3):
    edges = [
        (q, a, p) for q in range(n) for a in range(k) for p in range(n) if rng.random() < density
    ]
    initials = [q for q in range(n) if rng.random() < 0.3] or [0]
    finals = [q for q in range(n) if rng.random() < 0.4]
    return Nfa.from_edges(k, n, edges, initials, finals)


def cycle_with_chord(n):
    """n states on a 0-labelled cycle, plus a 1-edge from the last state
    back to the second one; start and accept at state 0."""
    edges = [(i, 0, (i + 1) % n) for i in range(n)]
    edges.append((n - 1, 1, 1))
    return Nfa.from_edges(2, n, edges, [0], [0])


def brute_members(rule, bound):
    return [n for n in range(bound + 1) if rule(n)]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
