"""Built-in automatic sets used as examples and test fixtures."""

import re
from dataclasses import dataclass
from typing import Callable

from .automaton import Dfa, equivalent, explore
from .basis import hard_family
from .errors import InputError
from .numeral import canonicalize, encode
from .sumset import scale_by_constant


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    k: int
    machine: Dfa
    note: str
    rule: Callable[[int], bool]

    def __contains__(self, n):
        return self.rule(n)


def digit_set_machine(k, allowed):
    """Canonical DFA for the numbers whose base-k digits all lie in ``allowed``."""
    allowed = frozenset(allowed)
    raw = explore(k, True, lambda ok, a: ok and a in allowed, lambda ok: ok)
    return canonicalize(raw)


def _digits_in(k, allowed):
    return lambda n: set(encode(n, k)) <= set(allowed)


def _count_11(n):
    bits = bin(n)[2:]
    return sum(1 for i in range(len(bits) - 1) if bits[i] == bits[i + 1] == "1")


def _evil():
    return canonicalize(Dfa.from_rows(2, [[0, 1], [1, 0]], 0, [0]))


def _rudin_shapiro():
    # state: (parity of 11 blocks so far, previous bit)
    def step(s, a):
        return ((s[0] + (s[1] & a)) % 2, a)

    return canonicalize(explore(2, (0, 0), step, lambda s: s[0] == 1))


def _digits02():
    direct = digit_set_machine(4, {0, 2})
    scaled = scale_by_constant(digit_set_machine(4, {0, 1}), 2)
    if not equivalent(direct, scaled):
        raise AssertionError("digits02base4 disagrees with 2 * digits01base4")
    return direct


_BUILDERS = {
    "cantor3": (
        3,
        lambda: digit_set_machine(3, {0, 2}),
        "base-3 expansion uses only the digits 0 and 2",
        _digits_in(3, {0, 2}),
    ),
    "evil2": (
        2,
        _evil,
        "evil numbers: an even number of 1s in base 2",
        lambda n: bin(n).count("1") % 2 == 0,
    ),
    "rudinshapiro2": (
        2,
        _rudin_shapiro,
        "odd number of (possibly overlapping) 11 blocks in base 2",
        lambda n: _count_11(n) % 2 == 1,
    ),
    "digits01base4": (
        4,
        lambda: digit_set_machine(4, {0, 1}),
        "base-4 expansion uses only the digits 0 and 1",
        _digits_in(4, {0, 1}),
    ),
    "digits02base4": (
        4,
        _digits02,
        "base-4 expansion uses only the digits 0 and 2 (twice digits01base4)",
        _digits_in(4, {0, 2}),
    ),
}

_HARD = re.compile(r"hard\((\d+),(\d+)\)$")


def names():
    return sorted(_BUILDERS) + ["hard(k,m)"]


def _hard_rule(k, m):
    return lambda n: n > 0 and len(encode(n, k)) % m == m - 1


def corpus(name):
    """Look up a built-in set; ``hard(k,m)`` is generated on demand."""
    key = name.replace(" ", "")
    match = _HARD.match(key)
    if match:
        k, m = int(match.group(1)), int(match.group(2))
        machine, _ = hard_family(k, m, 1)
        note = f"numbers with a base-{k} length congruent to -1 mod {m}"
        return CorpusEntry(f"hard({k},{m})", k, machine, note, _hard_rule(k, m))
    if key not in _BUILDERS:
        raise InputError(f"unknown corpus entry {name!r}; known: {', '.join(names())}")
    k, build, note, rule = _BUILDERS[key]
    return CorpusEntry(key, k, build(), note, rule)
