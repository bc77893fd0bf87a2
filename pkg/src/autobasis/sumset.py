"""Automata for sums of automatic sets.

All constructions read the digits of the result least significant first and
guess the digits of the summands, threading a carry.  Summands are used in
their padded form (every zero-padding accepted) so numbers of different
lengths line up.  Results are returned as minimal DFAs over canonical
representations.
"""

import itertools
from dataclasses import dataclass

from .automaton import (
    determinize,
    equivalent,
    explore,
    materialize,
    minimize,
    minimize_by_reversal,
    union,
)
from .errors import InputError
from .numeral import canonicalize, encode, padded

EXACT = "exact"
ATMOST = "atmost"


@dataclass(frozen=True)
class SumSpec:
    """Which sum to build: ``summands`` added in order.

    ``mode`` is ``"exact"`` (one element from each summand) or ``"atmost"``
    (union of the sums of the first i summands, i = 1..j).  ``distinct``
    admits only tuples of pairwise distinct values and needs all summands to
    describe the same set.
    """

    summands: tuple
    distinct: bool = False
    mode: str = EXACT

    def __post_init__(self):
        summands = tuple(self.summands)
        object.__setattr__(self, "summands", summands)
        if not summands:
            raise InputError("a sum needs at least one summand")
        if len({s.k for s in summands}) != 1:
            raise InputError("all summands must share the same base")
        if self.mode not in (EXACT, ATMOST):
            raise InputError(f"unknown sum mode {self.mode!r}")
        if self.distinct:
            first = canonicalize(summands[0])
            for other in summands[1:]:
                if not equivalent(first, canonicalize(other)):
                    raise InputError("distinct sums need identical summand sets")

    @classmethod
    def power(cls, a, j, mode=EXACT, distinct=False):
        if j < 1:
            raise InputError("order must be at least 1")
        return cls((a,) * j, distinct=distinct, mode=mode)

    @property
    def k(self):
        return self.summands[0].k

    @property
    def order(self):
        return len(self.summands)


def add_padded(a, b):
    """Padded DFA for S_a + S_b, given padded DFAs for both summands."""
    k = a.k
    if b.k != k:
        raise InputError("base mismatch")
    da, db = a.delta.tolist(), b.delta.tolist()
    fa, fb = a.finals, b.finals

    def successors(state, d):
        p, q, c = state
        out = []
        for x in range(k):
            y = (d - x - c) % k
            out.append((da[p][x], db[q][y], (x + y + c) // k))
        return out

    return minimize_by_reversal(
        materialize(
            k,
            [(a.initial, b.initial, 0)],
            successors,
            lambda s: s[2] == 0 and fa[s[0]] and fb[s[1]],
        )
    )


class SumProduct:
    """Parallel simulation of j padded summand DFAs with a carry.

    A state is ``(summand states, carry, differ bits)``.  The differ bits
    (one per pair of summands, only when ``distinct``) record that the two
    digit streams have already differed, i.e. the two values are distinct.
    Each tuple of summand digits gives its own successor, so counting paths
    counts ordered tuples of summands.
    """

    def __init__(self, machines, distinct=False):
        self.machines = [determinize(m) for m in machines]
        self.k = self.machines[0].k
        self.j = len(self.machines)
        self.distinct = distinct
        self.pairs = list(itertools.combinations(range(self.j), 2)) if distinct else []
        self.all_pairs = (1 << len(self.pairs)) - 1
        self.rows = [m.delta.tolist() for m in self.machines]
        self.finals = [m.finals for m in self.machines]
        k, j = self.k, self.j
        self.moves = {}
        for c in range(j):
            by_digit = [[] for _ in range(k)]
            for digits in itertools.product(range(k), repeat=j):
                total = sum(digits) + c
                by_digit[total % k].append((digits, total // k, self._differ_bits(digits)))
            self.moves[c] = by_digit

    def _differ_bits(self, digits):
        bits = 0
        for i, (x, y) in enumerate(self.pairs):
            if digits[x] != digits[y]:
                bits |= 1 << i
        return bits

    @property
    def initial(self):
        return (tuple(m.initial for m in self.machines), 0, 0)

    def successors(self, state, d):
        qs, c, bits = state
        rows = self.rows
        for digits, carry, differ in self.moves[c][d]:
            nq = tuple(rows[i][qs[i]][x] for i, x in enumerate(digits))
            yield (nq, carry, bits | differ)

    def accepting(self, state):
        qs, c, bits = state
        if c != 0 or bits != self.all_pairs:
            return False
        return all(self.finals[i][q] for i, q in enumerate(qs))

    def reachable_states(self, limit=100_000):
        seen = {self.initial}
        stack = [self.initial]
        while stack and len(seen) < limit:
            s = stack.pop()
            for d in range(self.k):
                for t in self.successors(s, d):
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
        return seen

    def to_dfa(self):
        return minimize_by_reversal(
            materialize(self.k, [self.initial], self.successors, self.accepting)
        )


def _exact_padded_prefixes(summands, distinct):
    """Yield padded DFAs for the sums of the first i summands, i = 1, 2, ..."""
    pads = [padded(s) for s in summands]
    if distinct:
        for i in range(1, len(pads) + 1):
            yield SumProduct(pads[:i], distinct=True).to_dfa()
        return
    acc = pads[0]
    yield acc
    for p in pads[1:]:
        acc = add_padded(acc, p)
        yield acc


def sum_automaton(spec):
    """Canonical DFA for the sum described by ``spec``."""
    if spec.mode == EXACT:
        last = None
        for last in _exact_padded_prefixes(spec.summands, spec.distinct):
            pass
        return canonicalize(last)
    acc = None
    for part in _exact_padded_prefixes(spec.summands, spec.distinct):
        acc = part if acc is None else minimize(union(acc, part))
    return canonicalize(acc)


def iter_sums(a, max_order, mode=EXACT):
    """Yield ``(j, canonical DFA)`` for j = 1..max_order, reusing each
    step's automaton for the next one."""
    pad = padded(a)
    exact = pad
    total = pad
    for j in range(1, max_order + 1):
        if j > 1:
            exact = add_padded(exact, pad)
            total = minimize(union(total, exact)) if mode == ATMOST else exact
        yield j, canonicalize(total)


def add_constant(a, c):
    """Canonical DFA for ``{n + c : n in S}``."""
    if c < 0:
        raise InputError("constant must be non-negative")
    pad = padded(a)
    k = pad.k
    cd = encode(c, k)
    length = len(cd)
    rows = pad.delta.tolist()

    def step(state, d):
        q, carry, pos = state
        ci = cd[pos] if pos < length else 0
        x = (d - ci - carry) % k
        return (rows[q][x], (x + ci + carry) // k, min(pos + 1, length))

    def accepting(state):
        q, carry, pos = state
        return bool(pad.finals[q]) and carry == 0 and pos == length

    return canonicalize(explore(k, (pad.initial, 0, 0), step, accepting))


def preimage_shift(t, c):
    """Canonical DFA for ``{n : n + c in T}``."""
    if c < 0:
        raise InputError("constant must be non-negative")
    pad = padded(t)
    k = pad.k
    cd = encode(c, k)
    length = len(cd)
    rows = pad.delta.tolist()

    def step(state, x):
        q, carry, pos = state
        ci = cd[pos] if pos < length else 0
        total = x + ci + carry
        return (rows[q][total % k], total // k, min(pos + 1, length))

    def accepting(state):
        q, carry, pos = state
        rest = c // k**pos + carry
        return bool(pad.finals[pad.run(encode(rest, k), start=q)])

    return canonicalize(explore(k, (pad.initial, 0, 0), step, accepting))


def scale_by_constant(a, d):
    """Canonical DFA for ``{d * n : n in S}``."""
    if d < 1:
        raise InputError("scale factor must be positive")
    pad = padded(a)
    k = pad.k
    rows = pad.delta.tolist()

    def successors(state, e):
        q, carry = state
        out = []
        for x in range(k):
            total = d * x + carry
            if total % k == e:
                out.append((rows[q][x], total // k))
        return out

    raw = materialize(
        k, [(pad.initial, 0)], successors, lambda s: s[1] == 0 and bool(pad.finals[s[0]])
    )
    return canonicalize(minimize_by_reversal(raw))


def count_representations(n, spec):
    """Number of ordered tuples (x_1, ..., x_j), x_i in S_i, summing to n.

    Exact mode only.  The count is a path count through ``SumProduct`` along
    the canonical digits of n; every summand fits in that many digits.
    """
    if n < 0:
        return 0
    return representation_counter(spec)(n)


def representation_counter(spec):
    """Reusable ``n -> count`` function; pads the summands once."""
    if spec.mode != EXACT:
        raise InputError("representation counts are defined for exact sums only")
    product = SumProduct([padded(s) for s in spec.summands], distinct=spec.distinct)
    cache = {}

    def count(n):
        counts = {product.initial: 1}
        for d in encode(n, spec.k):
            nxt = {}
            for state, c in counts.items():
                key = (state, d)
                succ = cache.get(key)
                if succ is None:
                    succ = cache[key] = list(product.successors(state, d))
                for t in succ:
                    nxt[t] = nxt.get(t, 0) + c
            counts = nxt
        return sum(c for state, c in counts.items() if product.accepting(state))

    return count

