"""Decide whether an automatic set is an (asymptotic) additive basis.

The order search follows the classical recipe: check non-sparseness and
gcd 1 first (both necessary, and together sufficient for an asymptotic
basis), then build the sum automata of order 1, 2, ... and stop at the
first order whose set of non-representable numbers is finite (asymptotic
basis) or contains nothing but possibly 0 (basis).
"""

import enum
from dataclasses import dataclass, field
from typing import Optional

from .automaton import (
    Dfa,
    difference,
    enumerate_words,
    explore,
    intersect,
    is_empty,
    is_finite,
    minimize,
    shortest_path,
    union,
)
from .errors import InputError, NoRunError
from .gcd import gcd_of_set
from .growth import _Structure, is_sparse
from .numeral import (
    canonical_language,
    canonicalize,
    contains,
    decode,
    least_value,
    padded,
    set_members,
)
from .sumset import ATMOST, EXACT, iter_sums, preimage_shift

DEFAULT_MAX_ORDER = 8


class Reason(enum.Enum):
    OK = "ok"
    NON_SPARSE_FAILED = "non-sparse-failed"
    GCD_FAILED = "gcd-failed"
    ONE_NOT_IN_S = "one-not-in-s"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BasisReport:
    """Outcome of :func:`decide_basis`.

    ``exceptions`` never contains 0: zero counts as the empty sum.  Whether
    0 is itself a sum of one or more members is ``zero_representable``, and
    :attr:`exceptions_with_zero` gives the list without the empty-sum
    convention.
    """

    k: int
    state_count: int
    sparse: bool
    gcd: Optional[int]
    one_in_s: bool
    asymptotic_basis: bool
    exact_basis: bool
    reason: Reason
    asymptotic: bool
    mode: str
    max_order: int
    theoretical_N: int
    theoretical_M: int
    order: Optional[int] = None
    threshold: Optional[int] = None
    exceptions: tuple = ()
    zero_representable: bool = False
    orders_tried: tuple = field(default_factory=tuple)

    @property
    def decided(self):
        return self.reason is not Reason.INCONCLUSIVE

    @property
    def exceptions_with_zero(self):
        if self.zero_representable or self.reason is not Reason.OK:
            return self.exceptions
        return (0,) + self.exceptions


@dataclass(frozen=True)
class SyndeticReport:
    c: int
    holds: bool
    violations: tuple


@dataclass(frozen=True)
class InfiniteWitness:
    """An infinite exception language with a pumpable family inside it.

    Every word ``prefix + cycle * i + suffix`` (LSD-first) belongs to
    ``language``.
    """

    language: Dfa
    prefix: tuple
    cycle: tuple
    suffix: tuple

    def word(self, i):
        return self.prefix + self.cycle * i + self.suffix

    def pumped_values(self, limit):
        out = []
        i = 0
        while True:
            v = decode(self.word(i), self.language.k)
            if v > limit:
                return out
            out.append(v)
            i += 1

    def members(self, limit):
        return set_members(self.language, limit)


def theoretical_bounds(k, m):
    """Worst-case order N and threshold M for a set whose minimal DFA has
    ``m`` states: ``(5 k^(16m+3), 3 k^(16m+5))``."""
    if k < 2 or m < 1:
        raise InputError("need k >= 2 and m >= 1")
    return 5 * k ** (16 * m + 3), 3 * k ** (16 * m + 5)


def minimal_state_count(a):
    """States of the minimal DFA for the padded representation language."""
    return padded(a).n_states


def _finite_values(language):
    words = enumerate_words(language, language.n_states)
    return sorted(decode(w, language.k) for w in words)


def decide_basis(a, max_order=DEFAULT_MAX_ORDER, asymptotic=True, mode=ATMOST):
    """Find the least order j for which S is an asymptotic basis
    (``asymptotic=True``) or a basis.

    ``mode`` selects sums of at most j members (``"atmost"``, the usual
    definition) or of exactly j members (``"exact"``).
    """
    if max_order < 1:
        raise InputError("max_order must be at least 1")
    if mode not in (EXACT, ATMOST):
        raise InputError(f"unknown sum mode {mode!r}")
    canon = canonicalize(a)
    k = canon.k
    m = minimal_state_count(canon)
    big_n, big_m = theoretical_bounds(k, m)
    sparse = is_sparse(canon)
    one_in_s = contains(canon, 1)
    base = dict(
        k=k,
        state_count=m,
        sparse=sparse,
        one_in_s=one_in_s,
        asymptotic=asymptotic,
        mode=mode,
        max_order=max_order,
        theoretical_N=big_n,
        theoretical_M=big_m,
        zero_representable=contains(canon, 0),
    )
    if sparse:
        return BasisReport(
            gcd=None,
            asymptotic_basis=False,
            exact_basis=False,
            reason=Reason.NON_SPARSE_FAILED,
            **base,
        )
    g = gcd_of_set(canon).g
    if g != 1:
        return BasisReport(
            gcd=g, asymptotic_basis=False, exact_basis=False, reason=Reason.GCD_FAILED, **base
        )
    verdict = dict(gcd=1, asymptotic_basis=True, exact_basis=one_in_s)
    if not asymptotic and not one_in_s:
        return BasisReport(reason=Reason.ONE_NOT_IN_S, **verdict, **base)

    everything = canonical_language(k)
    tried = []
    for j, sums in iter_sums(canon, max_order, mode):
        tried.append(j)
        missing = minimize(difference(everything, sums))
        if not is_finite(missing):
            continue
        values = [v for v in _finite_values(missing) if v != 0]
        if not asymptotic and values:
            continue
        threshold = values[-1] + 1 if values else 0
        return BasisReport(
            reason=Reason.OK,
            order=j,
            threshold=threshold,
            exceptions=tuple(values),
            orders_tried=tuple(tried),
            **verdict,
            **base,
        )
    return BasisReport(reason=Reason.INCONCLUSIVE, orders_tried=tuple(tried), **verdict, **base)


def exceptions_relative(sums, target, require_finite=False):
    """Members of ``target`` that are not in ``sums``.

    Returns the sorted list when it is finite; otherwise an
    :class:`InfiniteWitness` (or ``InputError`` with ``require_finite``).
    """
    if sums.k != target.k:
        raise InputError("base mismatch")
    missing = minimize(difference(canonicalize(target), canonicalize(sums)))
    if is_finite(missing):
        return _finite_values(missing)
    if require_finite:
        raise InputError("the exception set is infinite")
    return _pumping_witness(missing)


def _pumping_witness(language):
    st = _Structure(language)
    order = []
    seen = {language.initial}
    queue = [language.initial]
    i = 0
    while i < len(queue):
        q = queue[i]
        i += 1
        order.append(q)
        for _, p in st.succ[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    pivot = next(q for q in order if st.cyclic(st.comp_of[q]))
    prefix = shortest_path(language, [language.initial], lambda p: p == pivot)
    cycle = shortest_path(language, [pivot], lambda p: p == pivot, nonempty=True)
    suffix = shortest_path(language, [pivot], lambda p: bool(language.finals[p]))
    return InfiniteWitness(language, prefix, cycle, suffix)


def check_syndetic(t, c, bound=10_000):
    """Is every member n of T followed by another member within n+1..n+c?"""
    if c < 1:
        raise InputError("gap bound c must be at least 1")
    canon = canonicalize(t)
    ahead = preimage_shift(canon, 1)
    for i in range(2, c + 1):
        ahead = minimize(union(ahead, preimage_shift(canon, i)))
    bad = minimize(difference(canon, ahead))
    holds = is_empty(bad)
    violations = () if holds else tuple(set_members(bad, bound))
    return SyndeticReport(c=c, holds=holds, violations=violations)


def find_consecutive_run(u, c):
    """Least N with N, N+1, ..., N+c all in U."""
    if c < 0:
        raise InputError("run length must be non-negative")
    canon = canonicalize(u)
    run = canon
    for i in range(1, c + 1):
        run = minimize(intersect(run, preimage_shift(canon, i)))
    n = least_value(run)
    if n is None:
        raise NoRunError(f"no {c + 1} consecutive integers lie in the set")
    return n


def hard_family(k, m, d):
    """Set of numbers whose digit count is -1 mod m, and a value that needs
    many summands from it: ``k^(md-2) - 1``."""
    if k < 2 or m < 2 or d < 1:
        raise InputError("need k >= 2, m >= 2, d >= 1")

    # state: (length mod m, last digit nonzero)
    def step(s, a):
        return ((s[0] + 1) % m, a != 0)

    machine = minimize(explore(k, (0, False), step, lambda s: s[0] == m - 1 and s[1]))
    return machine, k ** (m * d - 2) - 1

