"""Base-k numerals and the automata that describe sets of integers.

A DFA describes the set ``{n : (n)_k accepted}`` where ``(n)_k`` is the
canonical LSD-first expansion (no trailing zero digit; ``(0)_k`` is the
empty word).  Two derived languages are used throughout:

* the canonical language of the set, ``canonicalize(a)``;
* the padded language ``{w : [w]_k in S}``, ``padded(a)``, which is what a
  summand must accept when numbers of different lengths are added.
"""

import numpy as np

from . import _kernels
from .automaton import (
    Dfa,
    Nfa,
    determinize,
    explore,
    intersect,
    minimize,
    is_empty,
)
from .errors import InputError


def _check_base(k):
    if k < 2:
        raise InputError(f"base must be at least 2, got {k}")


def encode(n, k):
    """Canonical LSD-first digits of ``n``; ``encode(0, k) == ()``."""
    _check_base(k)
    if n < 0:
        raise InputError("only natural numbers have a base-k expansion")
    digits = []
    while n:
        n, r = divmod(n, k)
        digits.append(r)
    return tuple(digits)


def decode(word, k):
    """Value of an LSD-first digit word; trailing zeros are allowed."""
    _check_base(k)
    value = 0
    for d in reversed(word):
        if not 0 <= d < k:
            raise InputError(f"digit {d} out of range for base {k}")
        value = value * k + d
    return value


def canonical_language(k):
    """DFA for the empty word plus all words whose last digit is nonzero."""
    _check_base(k)
    # 0: empty word read, 1: last digit nonzero, 2: last digit zero
    rows = [[2] + [1] * (k - 1), [2] + [1] * (k - 1), [2] + [1] * (k - 1)]
    return Dfa.from_rows(k, rows, 0, (0, 1))


def zero_closure(a):
    """DFA for ``{w 0^j : w in L(a), j >= 0}``."""
    a = determinize(a)
    n, k = a.n_states, a.k
    sink = n
    edges = [(q, d, int(a.delta[q, d])) for q in range(n) for d in range(k)]
    edges += [(q, 0, sink) for q in a.final_states]
    edges.append((sink, 0, sink))
    nfa = Nfa.from_edges(k, n + 1, edges, (a.initial,), a.final_states | {sink})
    return minimize(nfa)


def canonicalize(a):
    """Restrict ``a`` to canonical words (same value set, one word per value)."""
    return minimize(intersect(determinize(a), canonical_language(a.k)))


def padded(a):
    """DFA for ``{w : [w]_k in S}``, every zero-padding of every member."""
    return zero_closure(canonicalize(a))


def from_values(values, k):
    """Canonical DFA for a finite set of naturals."""
    _check_base(k)
    words = {encode(v, k) for v in values}
    prefixes = {w[:i] for w in words for i in range(len(w) + 1)}
    dead = "dead"
    return minimize(
        explore(
            k,
            (),
            lambda w, d: (w + (d,)) if w != dead and (w + (d,)) in prefixes else dead,
            lambda w: w != dead and w in words,
        )
    )


def all_naturals(k):
    return canonical_language(k)


def empty_set(k):
    _check_base(k)
    return Dfa.from_rows(k, [[0] * k], 0, ())


def contains(a, n):
    return a.accepts(encode(n, a.k))


def member_mask(a, bound):
    """Boolean numpy vector ``m`` with ``m[n] == (n in S)`` for ``n <= bound``."""
    a = determinize(a)
    if bound < 0:
        return np.zeros(0, dtype=np.bool_)
    return _kernels.member_mask(
        np.ascontiguousarray(a.delta), np.ascontiguousarray(a.finals), a.initial, int(bound)
    )


def set_members(a, bound):
    """Sorted list of members ``n <= bound``."""
    return [int(n) for n in np.nonzero(member_mask(a, bound))[0]]


def least_value(a, positive=False):
    """Smallest member of the set (``n >= 1`` with ``positive``), or ``None``.

    The shortest accepted canonical word is found first; among words of that
    length the numerically least is chosen digit by digit starting from the
    most significant (last) position.
    """
    canon = canonicalize(a)
    if positive:
        canon = minimize(intersect(canon, _nonempty_words(canon.k)))
    if is_empty(canon):
        return None
    delta, finals = canon.delta, canon.finals
    layers = [{canon.initial}]
    while not any(finals[q] for q in layers[-1]):
        layers.append({int(delta[q, d]) for q in layers[-1] for d in range(canon.k)})
    length = len(layers) - 1
    targets = {q for q in layers[-1] if finals[q]}
    digits = [0] * length
    for i in range(length - 1, -1, -1):
        for d in range(canon.k):
            hits = {q for q in layers[i] if int(delta[q, d]) in targets}
            if hits:
                digits[i] = d
                targets = hits
                break
    return decode(digits, canon.k)


def _nonempty_words(k):
    return Dfa.from_rows(k, [[1] * k, [1] * k], 0, (1,))
