"""Finite automata over the digit alphabet {0, ..., k-1}.

Words are tuples of ints read least significant digit first.  A ``Dfa`` is
always complete; an ``Nfa`` may have missing transitions.  Both are
immutable, and every operation here returns a new machine.
"""

import os
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InputError, StateLimitError

Word = tuple

DEFAULT_MAX_STATES = 2_000_000


def max_states():
    """Resource guard on subset construction (``AUTOBASIS_MAX_STATES``)."""
    raw = os.environ.get("AUTOBASIS_MAX_STATES")
    if not raw:
        return DEFAULT_MAX_STATES
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"AUTOBASIS_MAX_STATES must be an integer, got {raw!r}")


@dataclass(frozen=True, eq=False)
class Dfa:
    """Complete deterministic automaton.

    ``delta[q, a]`` is the successor of state ``q`` on digit ``a``;
    ``finals`` is a boolean vector indexed by state.
    """

    k: int
    delta: np.ndarray
    initial: int
    finals: np.ndarray

    def __post_init__(self):
        if self.k < 2:
            raise InputError(f"base must be at least 2, got {self.k}")
        delta = np.array(self.delta, dtype=np.int64, copy=True)
        if delta.size == 0:
            delta = delta.reshape(0, self.k)
        finals = np.array(self.finals, dtype=np.bool_, copy=True).reshape(-1)
        n = delta.shape[0]
        if delta.ndim != 2 or delta.shape[1] != self.k:
            raise InputError(f"transition table must have shape (n, {self.k})")
        if n == 0:
            raise InputError("a DFA needs at least one state")
        if finals.shape[0] != n:
            raise InputError("finals vector length differs from state count")
        if delta.min() < 0 or delta.max() >= n:
            raise InputError("transition target out of range")
        if not 0 <= self.initial < n:
            raise InputError(f"initial state {self.initial} out of range")
        delta.setflags(write=False)
        finals.setflags(write=False)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "finals", finals)
        object.__setattr__(self, "initial", int(self.initial))

    @classmethod
    def from_rows(cls, k, rows, initial, finals):
        """Build from a list of transition rows and an iterable of final states."""
        n = len(rows)
        vec = np.zeros(n, dtype=np.bool_)
        for q in finals:
            vec[q] = True
        return cls(k, np.asarray(rows, dtype=np.int64).reshape(n, k), initial, vec)

    @property
    def n_states(self):
        return self.delta.shape[0]

    @property
    def final_states(self):
        return frozenset(int(q) for q in np.nonzero(self.finals)[0])

    def run(self, word, start=None):
        q = self.initial if start is None else start
        for a in word:
            q = int(self.delta[q, a])
        return q

    def accepts(self, word):
        for a in word:
            if not 0 <= a < self.k:
                raise InputError(f"digit {a} out of range for base {self.k}")
        return bool(self.finals[self.run(word)])

    def to_nfa(self):
        rows = tuple(
            tuple(frozenset((int(self.delta[q, a]),)) for a in range(self.k))
            for q in range(self.n_states)
        )
        return Nfa(self.k, self.n_states, rows, frozenset((self.initial,)), self.final_states)

    def __eq__(self, other):
        if not isinstance(other, Dfa):
            return NotImplemented
        return (
            self.k == other.k
            and self.initial == other.initial
            and np.array_equal(self.delta, other.delta)
            and np.array_equal(self.finals, other.finals)
        )

    def __hash__(self):
        return hash((self.k, self.initial, self.delta.tobytes(), self.finals.tobytes()))

    def __repr__(self):
        return f"Dfa(k={self.k}, states={self.n_states}, finals={sorted(self.final_states)})"


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton; ``delta[q][a]`` is a frozenset of states."""

    k: int
    n_states: int
    delta: tuple
    initials: frozenset
    finals: frozenset

    def __post_init__(self):
        if self.k < 2:
            raise InputError(f"base must be at least 2, got {self.k}")
        if len(self.delta) != self.n_states:
            raise InputError("transition table length differs from state count")
        for row in self.delta:
            if len(row) != self.k:
                raise InputError(f"every state needs {self.k} transition entries")
            for targets in row:
                for p in targets:
                    if not 0 <= p < self.n_states:
                        raise InputError(f"transition target {p} out of range")
        for q in self.initials | self.finals:
            if not 0 <= q < self.n_states:
                raise InputError(f"state {q} out of range")

    @classmethod
    def from_edges(cls, k, n_states, edges, initials, finals):
        """Build from ``(source, digit, target)`` triples."""
        rows = [[set() for _ in range(k)] for _ in range(n_states)]
        for q, a, p in edges:
            if not 0 <= a < k:
                raise InputError(f"digit {a} out of range for base {k}")
            rows[q][a].add(p)
        delta = tuple(tuple(frozenset(s) for s in row) for row in rows)
        return cls(k, n_states, delta, frozenset(initials), frozenset(finals))

    def edges(self):
        for q, row in enumerate(self.delta):
            for a, targets in enumerate(row):
                for p in targets:
                    yield q, a, p

    def accepts(self, word):
        cur = set(self.initials)
        for a in word:
            if not 0 <= a < self.k:
                raise InputError(f"digit {a} out of range for base {self.k}")
            cur = {p for q in cur for p in self.delta[q][a]}
        return bool(cur & self.finals)


def _check_same_base(*machines):
    ks = {m.k for m in machines}
    if len(ks) != 1:
        raise InputError(f"base mismatch: {sorted(ks)}")
    return ks.pop()


def explore(k, start, step, accepting, limit=None):
    """Materialize the part of an implicit DFA reachable from ``start``.

    ``step(state, digit)`` must return a hashable state and
    ``accepting(state)`` a bool.  States are numbered in breadth-first
    order with digits tried in increasing order, so the result depends only
    on the implicit machine.
    """
    limit = max_states() if limit is None else limit
    index = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        state = order[i]
        row = []
        for a in range(k):
            nxt = step(state, a)
            j = index.get(nxt)
            if j is None:
                j = len(order)
                if j >= limit:
                    raise StateLimitError(
                        f"automaton construction exceeded {limit} states "
                        "(raise AUTOBASIS_MAX_STATES to allow more)"
                    )
                index[nxt] = j
                order.append(nxt)
            row.append(j)
        rows.append(row)
        i += 1
    finals = np.fromiter((bool(accepting(s)) for s in order), dtype=np.bool_, count=len(order))
    return Dfa(k, np.asarray(rows, dtype=np.int64).reshape(len(order), k), 0, finals)


def subset_construction(k, initials, successors, accepting, limit=None):
    """Lazy determinization of an implicitly given NFA.

    ``successors(state, digit)`` returns an iterable of NFA states; it is
    called at most once per (state, digit).  Subsets are canonicalized as
    sorted tuples, so only reachable subsets are ever built.
    """
    memo = {}
    final_memo = {}

    def succ(state, a):
        key = (state, a)
        got = memo.get(key)
        if got is None:
            got = tuple(successors(state, a))
            memo[key] = got
        return got

    def is_final(state):
        got = final_memo.get(state)
        if got is None:
            got = final_memo[state] = bool(accepting(state))
        return got

    def step(subset, a):
        out = set()
        for s in subset:
            out.update(succ(s, a))
        return tuple(sorted(out))

    def subset_final(subset):
        return any(is_final(s) for s in subset)

    start = tuple(sorted(set(initials)))
    return explore(k, start, step, subset_final, limit)


def materialize(k, initials, successors, accepting, limit=None):
    """Explicit NFA for the part of an implicit NFA reachable from
    ``initials``, numbered in breadth-first order."""
    limit = max_states() if limit is None else limit
    start = sorted(set(initials))
    index = {s: i for i, s in enumerate(start)}
    order = list(start)
    edges = []
    i = 0
    while i < len(order):
        state = order[i]
        for a in range(k):
            for nxt in successors(state, a):
                j = index.get(nxt)
                if j is None:
                    j = len(order)
                    if j >= limit:
                        raise StateLimitError(
                            f"automaton construction exceeded {limit} states "
                            "(raise AUTOBASIS_MAX_STATES to allow more)"
                        )
                    index[nxt] = j
                    order.append(nxt)
                edges.append((i, a, j))
        i += 1
    finals = [j for j, s in enumerate(order) if accepting(s)]
    return Nfa.from_edges(k, len(order), edges, range(len(start)), finals)


def minimize_by_reversal(a):
    """Minimal DFA via two reversals (Brzozowski).

    Used for sum automata: read least significant digit first they
    determinize badly, while the reversed machine (most significant digit
    first) stays small.
    """
    return minimize(determinize(reverse(minimize(determinize(reverse(a))))))


def determinize(a):
    """Subset construction; the result accepts exactly L(a)."""
    if isinstance(a, Dfa):
        return a
    return subset_construction(
        a.k, a.initials, lambda q, d: a.delta[q][d], lambda q: q in a.finals
    )


def reachable(a):
    """Sorted list of states reachable from the initial state."""
    seen = np.zeros(a.n_states, dtype=np.bool_)
    seen[a.initial] = True
    stack = [a.initial]
    delta = a.delta
    while stack:
        q = stack.pop()
        for p in delta[q]:
            p = int(p)
            if not seen[p]:
                seen[p] = True
                stack.append(p)
    return [int(q) for q in np.nonzero(seen)[0]]


def coreachable(a):
    """Boolean vector: states from which some final state is reachable."""
    n = a.n_states
    preds = [[] for _ in range(n)]
    for q in range(n):
        for p in a.delta[q]:
            preds[int(p)].append(q)
    seen = a.finals.copy()
    stack = [int(q) for q in np.nonzero(seen)[0]]
    while stack:
        p = stack.pop()
        for q in preds[p]:
            if not seen[q]:
                seen[q] = True
                stack.append(q)
    return seen


def useful_states(a):
    """States both reachable from the initial state and co-reachable."""
    co = coreachable(a)
    return [q for q in reachable(a) if co[q]]


def _restrict(a, keep):
    """Sub-DFA on the states ``keep`` (must contain the initial state and be
    closed under transitions)."""
    remap = {q: i for i, q in enumerate(keep)}
    rows = [[remap[int(p)] for p in a.delta[q]] for q in keep]
    finals = [a.finals[q] for q in keep]
    return Dfa(a.k, np.asarray(rows, dtype=np.int64).reshape(len(keep), a.k), remap[a.initial], finals)


def _canonical_numbering(a):
    """Renumber states in breadth-first order from the initial state."""
    return explore(a.k, a.initial, lambda q, d: int(a.delta[q, d]), lambda q: a.finals[q])


def minimize(a):
    """Minimal complete DFA for L(a), with canonical state numbering.

    Two DFAs accept the same language iff their minimizations compare equal.
    """
    a = determinize(a)
    a = _restrict(a, reachable(a))
    labels = a.finals.astype(np.int64)
    if labels.min() == labels.max():
        labels = np.zeros(a.n_states, dtype=np.int64)
        count = 1
    else:
        count = 2
    delta = np.ascontiguousarray(a.delta)
    while True:
        labels, new_count = _kernels.refine(delta, labels)
        if new_count == count:
            break
        count = new_count
    rows = np.zeros((count, a.k), dtype=np.int64)
    finals = np.zeros(count, dtype=np.bool_)
    rows[labels] = labels[delta]
    finals[labels] = a.finals
    quotient = Dfa(a.k, rows, int(labels[a.initial]), finals)
    return _canonical_numbering(quotient)


def _product(a, b, combine):
    k = _check_same_base(a, b)
    da, db = a.delta, b.delta
    fa, fb = a.finals, b.finals
    return explore(
        k,
        (a.initial, b.initial),
        lambda s, d: (int(da[s[0], d]), int(db[s[1], d])),
        lambda s: combine(bool(fa[s[0]]), bool(fb[s[1]])),
    )


def complement(a):
    return Dfa(a.k, a.delta, a.initial, ~a.finals)


def intersect(a, b):
    return _product(a, b, lambda x, y: x and y)


def union(a, b):
    return _product(a, b, lambda x, y: x or y)


def difference(a, b):
    return _product(a, b, lambda x, y: x and not y)


def symmetric_difference(a, b):
    return _product(a, b, lambda x, y: x != y)


def is_empty(a):
    a = determinize(a)
    return not any(a.finals[q] for q in reachable(a))


def equivalent(a, b):
    """Language equality, decided by emptiness of the symmetric difference."""
    return is_empty(symmetric_difference(determinize(a), determinize(b)))


def is_subset(a, b):
    return is_empty(difference(determinize(a), determinize(b)))


def trim(a):
    """Keep only states that are reachable and co-reachable (NFA in, NFA out)."""
    if isinstance(a, Dfa):
        a = a.to_nfa()
    fwd = set(a.initials)
    stack = list(fwd)
    while stack:
        q = stack.pop()
        for row in a.delta[q]:
            for p in row:
                if p not in fwd:
                    fwd.add(p)
                    stack.append(p)
    preds = [set() for _ in range(a.n_states)]
    for q, _, p in a.edges():
        preds[p].add(q)
    back = set(a.finals)
    stack = list(back)
    while stack:
        p = stack.pop()
        for q in preds[p]:
            if q not in back:
                back.add(q)
                stack.append(q)
    keep = sorted(fwd & back)
    remap = {q: i for i, q in enumerate(keep)}
    delta = tuple(
        tuple(frozenset(remap[p] for p in a.delta[q][d] if p in remap) for d in range(a.k))
        for q in keep
    )
    return Nfa(
        a.k,
        len(keep),
        delta,
        frozenset(remap[q] for q in a.initials if q in remap),
        frozenset(remap[q] for q in a.finals if q in remap),
    )


def reverse(a):
    """NFA for the reversal of L(a)."""
    if isinstance(a, Dfa):
        a = a.to_nfa()
    rows = [[set() for _ in range(a.k)] for _ in range(a.n_states)]
    for q, d, p in a.edges():
        rows[p][d].add(q)
    delta = tuple(tuple(frozenset(s) for s in row) for row in rows)
    return Nfa(a.k, a.n_states, delta, a.finals, a.initials)


def _has_cycle(nodes, succ):
    """Iterative three-colour DFS cycle check on the subgraph ``nodes``."""
    colour = dict.fromkeys(nodes, 0)
    for root in nodes:
        if colour[root]:
            continue
        colour[root] = 1
        stack = [(root, iter(succ(root)))]
        while stack:
            q, it = stack[-1]
            for p in it:
                c = colour.get(p)
                if c is None:
                    continue
                if c == 1:
                    return True
                if c == 0:
                    colour[p] = 1
                    stack.append((p, iter(succ(p))))
                    break
            else:
                colour[q] = 2
                stack.pop()
    return False


def is_finite(a):
    """True iff L(a) is finite: no cycle among the useful states."""
    a = determinize(a)
    keep = useful_states(a)
    return not _has_cycle(keep, lambda q: (int(p) for p in a.delta[q]))


def enumerate_words(a, max_len):
    """Accepted words of length at most ``max_len``, ordered by length and
    then lexicographically on the digit sequence."""
    if max_len < 0:
        raise InputError("max_len must be non-negative")
    a = determinize(a)
    co = coreachable(a)
    out = []
    layer = [((), a.initial)] if co[a.initial] else []
    for length in range(max_len + 1):
        out.extend(w for w, q in layer if a.finals[q])
        if length == max_len:
            break
        nxt = []
        for w, q in layer:
            for d in range(a.k):
                p = int(a.delta[q, d])
                if co[p]:
                    nxt.append((w + (d,), p))
        layer = nxt
    return out


def count_words_of_length(a, n):
    """g_L(n) = |L ∩ Σ^n|, exact, by dynamic programming over states."""
    return _count_layers(a, n)[-1]


def count_words_upto(a, n):
    """h_L(n) = |L ∩ Σ^{<=n}|."""
    return sum(_count_layers(a, n))


def _count_layers(a, n):
    if n < 0:
        raise InputError("length must be non-negative")
    a = determinize(a)
    finals = [q for q in range(a.n_states) if a.finals[q]]
    counts = [0] * a.n_states
    counts[a.initial] = 1
    layers = [sum(counts[q] for q in finals)]
    rows = a.delta.tolist()
    for _ in range(n):
        nxt = [0] * a.n_states
        for q, c in enumerate(counts):
            if c:
                for p in rows[q]:
                    nxt[p] += c
        counts = nxt
        layers.append(sum(counts[q] for q in finals))
    return layers


def shortest_path(a, sources, targets, nonempty=False):
    """Lexicographically least among the shortest words leading from one of
    ``sources`` to a state satisfying ``targets``; ``None`` if unreachable.

    ``targets`` is a predicate on states.  With ``nonempty`` the empty word
    does not count, which is what cycle searches need.
    """
    parent = {}
    queue = deque()
    for s in sources:
        if not nonempty and targets(s):
            return ()
        parent.setdefault(s, None)
        queue.append(s)
    while queue:
        q = queue.popleft()
        for d in range(a.k):
            p = int(a.delta[q, d])
            if nonempty and targets(p):
                return _unwind(parent, q) + (d,)
            if p not in parent:
                parent[p] = (q, d)
                queue.append(p)
                if not nonempty and targets(p):
                    return _unwind(parent, p)
    return None


def _unwind(parent, q):
    word = []
    while parent[q] is not None:
        q, d = parent[q]
        word.append(d)
    return tuple(reversed(word))
