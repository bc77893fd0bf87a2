"""Exact-rational checks on Cantor sets built from base-k expansions.

``C(u; y, z)`` is the set of reals ``0.u w1 w2 ...`` (digits most significant
first) with every block ``w_i`` equal to ``y`` or ``z``.  Writing
``rho = k^-s`` for the block length s, it equals ``U + k^-L C`` where ``C``
is the central Cantor set on ``[alpha, beta]`` with ratio of dissection
``rho``.  Equivalently ``C = alpha + (Z - Y) E`` with
``E = {sum e_i rho^(i-1) : e_i in {0, 1}}``, and the m-fold sum of ``C`` is
``m alpha + (Z - Y) B_m`` where ``B_m`` uses digits ``0..m`` instead.

Everything is computed with :class:`fractions.Fraction`.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from math import ceil, floor

from .errors import InputError, ResourceError

MAX_LEVEL_DEPTH = 20
MAX_SELFSIM_DEPTH = 12
GAP_SEARCH_DEPTH = 10


def _digits(word, k, name):
    word = tuple(int(d) for d in word)
    for d in word:
        if not 0 <= d < k:
            raise InputError(f"digit {d} of {name} out of range for base {k}")
    return word


def digit_value(word, k):
    """``0.w`` in base k: ``sum w_j k^-j`` for an MSD-first word."""
    total = Fraction(0)
    scale = Fraction(1)
    for d in word:
        scale /= k
        total += d * scale
    return total


def periodic_value(prefix, period, k):
    """Value of ``0.prefix (period)^inf``; an empty period means a finite word."""
    head = digit_value(prefix, k)
    if not period:
        return head
    tail = digit_value(period, k) / (1 - Fraction(1, k ** len(period)))
    return head + tail / Fraction(k) ** len(prefix)


@dataclass(frozen=True)
class CantorParams:
    """Parameters of ``C(u; y, z)`` with ``Y < Z`` after normalization."""

    k: int
    u: tuple
    y: tuple
    z: tuple
    L: int
    s: int
    K: int
    Y: Fraction
    Z: Fraction
    U: Fraction
    alpha: Fraction
    beta: Fraction

    @property
    def ratio(self):
        return Fraction(1, self.k**self.s)

    @property
    def interval(self):
        """Hull ``I = [U + k^-L alpha, U + k^-L beta]`` of ``C(u; y, z)``."""
        scale = Fraction(1, self.k**self.L)
        return self.U + scale * self.alpha, self.U + scale * self.beta

    def to_actual(self, m, t):
        """Point of the m-fold sum of ``C(u; y, z)`` whose normalized
        coordinate in ``B_m`` is ``t``."""
        inner = m * self.alpha + (self.Z - self.Y) * t
        return m * self.U + inner / self.k**self.L


def cantor_params(k, u, y, z, v=()):
    if k < 2:
        raise InputError(f"base must be at least 2, got {k}")
    u = _digits(u, k, "u")
    y = _digits(y, k, "y")
    z = _digits(z, k, "z")
    v = _digits(v, k, "v")
    if len(y) != len(z):
        raise InputError("y and z must have the same length")
    if not y:
        raise InputError("y and z must be nonempty")
    if y == z:
        raise InputError("y and z must differ")
    Y, Z = digit_value(y, k), digit_value(z, k)
    if Y > Z:
        y, z, Y, Z = z, y, Z, Y
    s = len(y)
    factor = 1 / (1 - Fraction(1, k**s))
    return CantorParams(
        k=k,
        u=u,
        y=y,
        z=z,
        L=len(u),
        s=s,
        K=len(v),
        Y=Y,
        Z=Z,
        U=digit_value(u, k),
        alpha=factor * Y,
        beta=factor * Z,
    )


@dataclass(frozen=True)
class DissectionSpec:
    ratio: Fraction
    a: Fraction
    b: Fraction
    depth: int

    def __post_init__(self):
        for name in ("ratio", "a", "b"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not 0 < self.ratio <= Fraction(1, 2):
            raise InputError("ratio of dissection must lie in (0, 1/2]")
        if not self.a < self.b:
            raise InputError("initial interval needs a < b")
        if self.depth < 0:
            raise InputError("depth must be non-negative")


def level_set(spec):
    """The ``2^depth`` intervals of level ``depth``, left to right."""
    if spec.depth > MAX_LEVEL_DEPTH:
        raise ResourceError(f"depth {spec.depth} exceeds the limit {MAX_LEVEL_DEPTH}")
    level = [(spec.a, spec.b)]
    r = spec.ratio
    for _ in range(spec.depth):
        nxt = []
        for lo, hi in level:
            width = (hi - lo) * r
            nxt.append((lo, lo + width))
            nxt.append((hi - width, hi))
        level = nxt
    return level


def _central_levels(p, depth):
    spec = DissectionSpec(p.ratio, p.alpha, p.beta, depth)
    levels = [[(spec.a, spec.b)]]
    for n in range(1, depth + 1):
        levels.append(level_set(replace(spec, depth=n)))
    return levels


def check_selfsimilarity(p, depth):
    """Check ``C'_(n+1) = S1(C'_n) u S2(C'_n)`` for n < depth, exactly.

    ``C'_n`` is level n of the central construction on ``[alpha, beta]``
    with ratio ``k^-s``; ``S1(x) = k^-s x + Y`` and ``S2(x) = k^-s x + Z``.
    """
    if depth > MAX_SELFSIM_DEPTH:
        raise ResourceError(f"depth {depth} exceeds the limit {MAX_SELFSIM_DEPTH}")
    rho = p.ratio
    levels = _central_levels(p, depth)
    for n in range(depth):
        images = sorted(
            (rho * lo + shift, rho * hi + shift) for shift in (p.Y, p.Z) for lo, hi in levels[n]
        )
        if images != levels[n + 1]:
            return False
    return True


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class NotInterval:
    """``gap`` is an open interval inside the hull that misses the m-fold sum."""

    gap: tuple
    depth: int


@dataclass(frozen=True)
class Inconclusive:
    depth: int


def _merge(intervals):
    intervals.sort()
    out = [list(intervals[0])]
    for lo, hi in intervals[1:]:
        if lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return [tuple(iv) for iv in out]


def mfold_interval(p, m, max_depth=GAP_SEARCH_DEPTH):
    """The m-fold sum of ``C(u; y, z)`` when it is an interval.

    For ``m >= k^s - 1`` the sum is the whole hull ``m I`` (the known
    theorem on sums of central Cantor sets is taken as given).  Below that,
    level sets of ``B_m`` are searched for a gap up to ``max_depth``; a gap
    at a finite level persists in the limit, so it proves the sum is not an
    interval.  No gap found means :class:`Inconclusive`.
    """
    if m < 1:
        raise InputError("m must be at least 1")
    lo, hi = p.interval
    if m >= p.k**p.s - 1:
        return Interval(m * lo, m * hi)
    rho = p.ratio
    top = m / (1 - rho)
    pieces = [(Fraction(0), top)]
    for depth in range(1, max_depth + 1):
        pieces = _merge([(b + rho * a, b + rho * c) for b in range(m + 1) for a, c in pieces])
        if len(pieces) > 1:
            gap = (p.to_actual(m, pieces[0][1]), p.to_actual(m, pieces[1][0]))
            return NotInterval(gap=gap, depth=depth)
    return Inconclusive(depth=max_depth)


def overlap_threshold(p):
    """Least m >= 1 with ``(m+1)(U + k^-L alpha) <= m (U + k^-L beta)``."""
    lo, hi = p.interval
    if hi <= lo:
        raise AssertionError("degenerate hull: beta == alpha")
    m = max(1, ceil(lo / (hi - lo)))
    assert (m + 1) * lo <= m * hi
    return m


def interval_sum_bound(p, t):
    """Number of summands ``k^(2L+2s+t+1)`` from ``C(u; y, z)`` that suffices
    for every real in ``[k^(L+s+1), k^(L+s+1+t)]``."""
    if t < 1:
        raise InputError("t must be at least 1")
    return p.k ** (2 * p.L + 2 * p.s + t + 1)


@dataclass(frozen=True)
class Decomposition:
    """``gamma`` as a sum of m elements of ``C(u; y, z)``.

    ``prefix`` and ``period`` are digit sequences in ``0..m``: the i-th
    summand takes block ``z`` at position i when ``i <= b`` and ``y``
    otherwise, so each summand has an eventually periodic expansion.
    """

    params: CantorParams
    gamma: Fraction
    m: int
    prefix: tuple
    period: tuple

    def summand_words(self):
        p = self.params

        def blocks(seq, j):
            return tuple(d for b in seq for d in (p.z if j <= b else p.y))

        return [
            (p.u + blocks(self.prefix, j), blocks(self.period, j)) for j in range(1, self.m + 1)
        ]

    def summands(self):
        k = self.params.k
        return [periodic_value(pre, per, k) for pre, per in self.summand_words()]

    def check(self):
        """Recompute every summand from its digits and compare the total."""
        return sum(self.summands(), Fraction(0)) == self.gamma


def decompose(p, gamma, max_steps=100_000):
    """Write ``gamma`` as a sum of as few elements of ``C(u; y, z)`` as the
    greedy base-``k^s`` digit expansion allows, or return ``None``.

    Uses the least ``m >= max(1, k^s - 1)`` whose hull contains ``gamma``;
    for such m, greedy digits in ``0..m`` never get stuck, and the residuals
    of a rational target repeat, which closes the period.
    """
    gamma = Fraction(gamma)
    lo, hi = p.interval
    m = max(1, p.k**p.s - 1, ceil(gamma / hi))
    if m * lo > gamma:
        return None
    tau = (p.k**p.L * (gamma - m * p.U) - m * p.alpha) / (p.Z - p.Y)
    scale = p.k**p.s
    seen = {}
    digits = []
    while tau not in seen:
        if len(digits) >= max_steps:
            raise ResourceError("greedy expansion did not become periodic")
        seen[tau] = len(digits)
        b = min(m, floor(tau))
        digits.append(b)
        tau = (tau - b) * scale
    start = seen[tau]
    return Decomposition(p, gamma, m, tuple(digits[:start]), tuple(digits[start:]))


@dataclass(frozen=True)
class GridReport:
    points: int
    bound: int
    max_terms: int
    failures: tuple

    @property
    def holds(self):
        return not self.failures


def verify_interval_sums(p, t, step):
    """Decompose every grid point of ``[k^(L+s+1), k^(L+s+1+t)]`` and check
    each decomposition exactly against :func:`interval_sum_bound`."""
    step = Fraction(step)
    if step <= 0:
        raise InputError("grid step must be positive")
    bound = interval_sum_bound(p, t)
    start = Fraction(p.k ** (p.L + p.s + 1))
    stop = Fraction(p.k ** (p.L + p.s + 1 + t))
    failures = []
    max_terms = 0
    count = 0
    gamma = start
    while gamma <= stop:
        count += 1
        dec = decompose(p, gamma)
        if dec is None or dec.m > bound or not dec.check():
            failures.append(gamma)
        else:
            max_terms = max(max_terms, dec.m)
        gamma += step
    return GridReport(points=count, bound=bound, max_terms=max_terms, failures=tuple(failures))
