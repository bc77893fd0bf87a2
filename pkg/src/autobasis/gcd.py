"""gcd of an automatic set, decided with divisibility automata."""

from dataclasses import dataclass
from math import gcd

from .automaton import difference, explore, intersect, is_empty, minimize
from .errors import InputError, NoNonzeroMemberError, PreconditionError
from .numeral import canonical_language, canonicalize, least_value


@dataclass(frozen=True)
class GcdReport:
    g: int
    smallest: int
    witnesses: tuple = ()


def smallest_member(a):
    """Least n >= 1 in S."""
    n = least_value(a, positive=True)
    if n is None:
        raise NoNonzeroMemberError("the set has no nonzero member")
    return n


def divisibility_automaton(k, d):
    """Canonical LSD-first representations of the multiples of ``d``.

    A state is (value read so far mod d, k^position mod d).
    """
    if d < 1:
        raise InputError("divisor must be positive")
    if k < 2:
        raise InputError(f"base must be at least 2, got {k}")
    raw = explore(
        k,
        (0, 1 % d),
        lambda s, a: ((s[0] + a * s[1]) % d, (s[1] * k) % d),
        lambda s: s[0] == 0,
    )
    return minimize(intersect(raw, canonical_language(k)))


def _divisors_desc(n):
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return sorted(small + large, reverse=True)


def _all_divisible(canon, d):
    return is_empty(difference(canon, divisibility_automaton(canon.k, d)))


def gcd_of_set(a):
    """gcd(S): the largest divisor d of the smallest member with S inside dN."""
    canon = canonicalize(a)
    m = smallest_member(canon)
    g = next(d for d in _divisors_desc(m) if _all_divisible(canon, d))
    witnesses = tuple(gcd_witnesses(canon)) if g == 1 else ()
    return GcdReport(g=g, smallest=m, witnesses=witnesses)


def gcd_witnesses(a):
    """Members of S whose gcd is 1, chosen greedily from the smallest up.

    Each step adds the least member not divisible by the running gcd, so
    every element kept lowers the running gcd.
    """
    canon = canonicalize(a)
    first = smallest_member(canon)
    out = [first]
    g = first
    while g > 1:
        rest = minimize(difference(canon, divisibility_automaton(canon.k, g)))
        nxt = least_value(rest, positive=True)
        if nxt is None:
            raise PreconditionError(f"gcd of the set is {g}, not 1")
        out.append(nxt)
        g = gcd(g, nxt)
    return out
