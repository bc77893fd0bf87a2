"""Polynomial versus exponential growth of regular languages.

A trimmed DFA has exponential growth exactly when one of its strongly
connected components is more than a single simple cycle, i.e. some state has
two outgoing transitions that stay inside its component.  Otherwise every
component is a simple cycle or a lone state, and the number of accepted words
of length at most n grows like n^d where d is the largest number of cyclic
components met along one path.
"""

from dataclasses import dataclass
from typing import Optional

from .automaton import determinize, shortest_path, useful_states
from .errors import PreconditionError
from .numeral import canonicalize


@dataclass(frozen=True)
class ExpWitness:
    """Words with ``s {t, u}* v`` inside the language, ``|t| == |u|``, ``t != u``."""

    s: tuple
    t: tuple
    u: tuple
    v: tuple
    state: int


@dataclass(frozen=True)
class GrowthReport:
    exponential: bool
    state_count: int
    degree: Optional[int] = None
    witness: Optional[ExpWitness] = None

    @property
    def polynomial(self):
        return not self.exponential

    @property
    def verdict(self):
        return "exponential" if self.exponential else "polynomial"


def strongly_connected_components(nodes, succ):
    """Tarjan's algorithm, iterative.  Components come out in reverse
    topological order (sinks first)."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


class _Structure:
    """Trimmed transition graph of a DFA with its component decomposition."""

    def __init__(self, a):
        self.dfa = a
        self.useful = useful_states(a)
        keep = set(self.useful)
        self.keep = keep
        rows = a.delta.tolist()
        self.succ = {q: [(d, p) for d, p in enumerate(rows[q]) if p in keep] for q in self.useful}
        self.comps = strongly_connected_components(
            self.useful, lambda q: (p for _, p in self.succ[q])
        )
        self.comp_of = {}
        for i, comp in enumerate(self.comps):
            for q in comp:
                self.comp_of[q] = i

    def internal_degree(self, q):
        c = self.comp_of[q]
        return sum(1 for _, p in self.succ[q] if self.comp_of[p] == c)

    def cyclic(self, i):
        comp = self.comps[i]
        if len(comp) > 1:
            return True
        q = comp[0]
        return any(p == q for _, p in self.succ[q])

    def branching_components(self):
        return [
            i for i, comp in enumerate(self.comps) if any(self.internal_degree(q) >= 2 for q in comp)
        ]


def classify(a):
    """Growth verdict for L(a) (DFA or NFA; NFAs are determinized first)."""
    a = determinize(a)
    st = _Structure(a)
    if st.branching_components():
        return GrowthReport(True, a.n_states, witness=_witness(st))
    return GrowthReport(False, a.n_states, degree=_degree(st))


def _degree(st):
    if not st.useful:
        return 0
    best = {}
    # components are in reverse topological order: successors come first
    for i, comp in enumerate(st.comps):
        here = 1 if st.cyclic(i) else 0
        after = 0
        for q in comp:
            for _, p in st.succ[q]:
                j = st.comp_of[p]
                if j != i:
                    after = max(after, best[j])
        best[i] = here + after
    return best[st.comp_of[st.dfa.initial]]


def degree(a):
    """Exponent d with h_L(n) = Theta(n^d) for a polynomial-growth language.

    Finite languages get d = 0."""
    report = classify(a)
    if report.exponential:
        raise PreconditionError("degree is only defined for polynomial growth")
    return report.degree


def exp_witness(a):
    """Words s, t, u, v with s{t,u}*v inside L(a) and short lengths.

    The pivot state is the first state in breadth-first order from the
    initial state that has two cycles inside its component.  ``s`` and ``v``
    are shortest paths into and out of it, ``x0`` is its shortest cycle and
    ``x1`` the shortest cycle that is not a power of the primitive root of
    ``x0``; then ``t = x0 x1`` and ``u = x1 x0``.
    """
    report = classify(a)
    if not report.exponential:
        raise PreconditionError("language has polynomial growth; no witness exists")
    return report.witness


def _primitive_root(word):
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return word[:p]
    return word


def _witness(st):
    a = st.dfa
    branching = set(st.branching_components())
    order = _bfs_order(st)
    pivot = next(q for q in order if st.comp_of[q] in branching)
    s = shortest_path(a, [a.initial], lambda p: p == pivot)
    v = shortest_path(a, [pivot], lambda p: bool(a.finals[p]))
    x0 = shortest_path(a, [pivot], lambda p: p == pivot, nonempty=True)
    x1 = _shortest_noncommuting_cycle(st, pivot, _primitive_root(x0))
    return ExpWitness(s=s, t=x0 + x1, u=x1 + x0, v=v, state=pivot)


def _bfs_order(st):
    a = st.dfa
    seen = {a.initial}
    order = [a.initial]
    i = 0
    while i < len(order):
        q = order[i]
        i += 1
        for _, p in st.succ.get(q, ()):
            if p not in seen:
                seen.add(p)
                order.append(p)
    return order


def _shortest_noncommuting_cycle(st, pivot, root):
    """Shortest (then least) cycle at ``pivot`` that is not in ``root*``.

    Breadth-first search on pairs (state, position in root) where position
    ``-1`` means the word has already left ``root*``'s prefixes.
    """
    comp = st.comp_of[pivot]
    r = len(root)
    start = (pivot, 0)
    parent = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for node in frontier:
            q, pos = node
            for d, p in st.succ[q]:
                if st.comp_of[p] != comp:
                    continue
                if pos < 0 or d != root[pos]:
                    npos = -1
                else:
                    npos = (pos + 1) % r
                child = (p, npos)
                if child in parent:
                    continue
                parent[child] = (node, d)
                if p == pivot and npos != 0:
                    word = []
                    cur = child
                    while parent[cur] is not None:
                        cur, dd = parent[cur]
                        word.append(dd)
                    return tuple(reversed(word))
                nxt.append(child)
        frontier = nxt
    raise AssertionError("branching component without a non-commuting cycle")


def is_sparse(a):
    """True iff the set has polynomially many canonical representations."""
    return classify(canonicalize(a)).polynomial

