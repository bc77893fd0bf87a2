"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; each test prints its line
straight to the terminal.  Brute-force oracles enumerate numbers directly
and never look at the automata under test beyond single-number membership.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from autobasis import bruteforce
from autobasis.automaton import count_words_upto, determinize, is_empty, minimize
from autobasis.basis import decide_basis, theoretical_bounds
from autobasis.cantor import (
    Interval,
    cantor_params,
    check_selfsimilarity,
    interval_sum_bound,
    mfold_interval,
    overlap_threshold,
)
from autobasis.cli import run
from autobasis.corpus import corpus
from autobasis.growth import classify
from autobasis.numeral import canonicalize, member_mask
from autobasis.report import parse_kv
from autobasis.sumset import ATMOST, EXACT, SumSpec, representation_counter, sum_automaton

from conftest import cycle_with_chord, random_dfa, random_nfa


def _line(capsys, label, ok, detail):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {label}: {detail}")


def _cli(*argv):
    code, out = run(["--format", "kv", *argv])
    return code, parse_kv(out)


def _int_list(text):
    text = text.strip("[]").strip()
    return [int(x) for x in text.split(",")] if text else []


def test_criterion_1_cantor_pairs_cover_evens(capsys):
    t0 = time.perf_counter()
    code, kv = _cli(
        "exceptions", "corpus:cantor3", "--order", "2", "--mode", "exact-sum", "--target", "even"
    )
    regular_ok = code == 0 and kv["finite"] == "true" and _int_list(kv["exceptions"]) == []
    bound = 10_000
    mask = member_mask(corpus("cantor3").machine, bound)
    sums = bruteforce.sumset([mask, mask])
    missing = [n for n in range(0, bound + 1, 2) if not sums[n]]
    odd_hits = [n for n in range(1, bound + 1, 2) if sums[n]]
    elapsed = time.perf_counter() - t0
    ok = regular_ok and not missing and not odd_hits and elapsed < 5
    _line(
        capsys,
        "1",
        ok,
        f"exceptions={kv['exceptions']} brute-force misses={missing[:5]} "
        f"odd sums={odd_hits[:5]} time={elapsed:.2f}s (<5s)",
    )
    assert ok


def test_criterion_2a_evil_order_three(capsys):
    t0 = time.perf_counter()
    code, kv = _cli("basis", "corpus:evil2", "--asymptotic")
    elapsed = time.perf_counter() - t0
    got = (kv["order"], _int_list(kv["exceptions"]), kv["threshold"])
    ok = code == 0 and got == ("3", [1, 2, 4, 7], "8") and elapsed < 30
    _line(
        capsys,
        "2a",
        ok,
        f"j={got[0]} exceptions={got[1]} M={got[2]} (want 3, [1, 2, 4, 7], 8) "
        f"time={elapsed:.2f}s",
    )
    assert ok


def test_criterion_2b_evil_order_two_witness(capsys):
    t0 = time.perf_counter()
    code, kv = _cli("exceptions", "corpus:evil2", "--order", "2", "--limit", "10000")
    elapsed = time.perf_counter() - t0
    expected = [2, 4, 7, 31, 127, 511, 2047, 8191]
    infinite = kv.get("finite") == "false"
    pumped = _int_list(kv.get("pumped_values", "[]"))
    members = _int_list(kv.get("members", "[]"))
    # independent truth: n <= 10^4 that are not a sum of two evil numbers
    bound = 10_000
    mask = member_mask(corpus("evil2").machine, bound)
    sums = bruteforce.sumset([mask, mask])
    truth = [n for n in range(bound + 1) if not sums[n]]
    ok = code == 0 and infinite and members == expected and elapsed < 30
    _line(
        capsys,
        "2b",
        ok,
        f"infinite={infinite} exception values={members} pumped={pumped} "
        f"expected={expected} brute force={truth} time={elapsed:.2f}s",
    )
    assert ok


def test_criterion_3_rudin_shapiro(capsys):
    t0 = time.perf_counter()
    code, kv = _cli("basis", "corpus:rudinshapiro2", "--asymptotic")
    elapsed = time.perf_counter() - t0
    expected = [0, 1, 2, 3, 4, 5, 7, 8, 10, 11, 13, 20]
    got = (kv["order"], _int_list(kv["exceptions"]), kv["threshold"])
    bound = 2_000
    mask = member_mask(corpus("rudinshapiro2").machine, bound)
    sums = bruteforce.sumset([mask, mask])
    truth = [n for n in range(bound + 1) if not sums[n]]
    ok = code == 0 and got == ("2", expected, "21") and truth == expected and elapsed < 30
    _line(
        capsys,
        "3",
        ok,
        f"j={got[0]} exceptions={got[1]} M={got[2]} brute force={truth} time={elapsed:.2f}s",
    )
    assert ok


def test_criterion_4_base_four_digits(capsys):
    t0 = time.perf_counter()
    code, kv = _cli("exceptions", "corpus:digits01base4", "--order", "3")
    cover_ok = code == 0 and kv["finite"] == "true" and _int_list(kv["exceptions"]) == []
    code2, kv2 = _cli(
        "count", "--summands", "digits01base4,digits02base4", "--order", "2", "--n", "0..1000"
    )
    counts = _int_list(kv2["counts"])
    count_ok = code2 == 0 and len(counts) == 1001 and set(counts) == {1}
    spot = [_cli("count", "--summands", "digits01base4,digits02base4", "--n", str(n))[1]["count"]
            for n in (0, 7, 63, 999, 1000)]
    # brute force: ordered pairs over the members
    bound = 1000
    m1 = member_mask(corpus("digits01base4").machine, bound)
    m2 = member_mask(corpus("digits02base4").machine, bound)
    a = [x for x in range(bound + 1) if m1[x]]
    b = [x for x in range(bound + 1) if m2[x]]
    brute = [0] * (bound + 1)
    for x in a:
        for y in b:
            if x + y <= bound:
                brute[x + y] += 1
    brute_ok = brute == counts
    elapsed = time.perf_counter() - t0
    ok = cover_ok and count_ok and brute_ok and spot == ["1"] * 5 and elapsed < 60
    _line(
        capsys,
        "4",
        ok,
        f"order-3 exceptions={kv['exceptions']} counts on 0..1000 in {sorted(set(counts))} "
        f"brute force agrees={brute_ok} time={elapsed:.2f}s",
    )
    assert ok


def _growth_oracle(dfa, horizon=840):
    """Exponential iff h(2N)/h(N) is astronomically large; the degree is the
    rounded log2 of that ratio otherwise.  Counts are exact integers from
    the transfer matrix, independent of any component analysis."""
    h1 = count_words_upto(dfa, horizon)
    if h1 == 0:
        return False, 0
    h2 = count_words_upto(dfa, 2 * horizon)
    ratio = math.log2(h2) - math.log2(h1)
    if ratio > 40:
        return True, None
    return False, round(ratio)


def _brute_gcd(mask):
    return int(np.gcd.reduce(np.nonzero(mask)[0])) if mask.any() else 0


@pytest.mark.slow
def test_criterion_5_basis_verdict_matches_brute_force(capsys):
    rng = np.random.default_rng(5)
    mismatches = []
    found = 0
    t0 = time.perf_counter()
    for i in range(200):
        k = int(rng.choice([2, 3]))
        a = minimize(random_dfa(rng, k, int(rng.integers(1, 5))))
        report = decide_basis(a, max_order=6, mode=ATMOST)
        canon = canonicalize(a)
        exponential, _ = _growth_oracle(canon)
        m = report.state_count
        mask = member_mask(canon, max(10_000, k ** (2 * m + 2)))
        g = _brute_gcd(mask)
        oracle = exponential and g == 1
        if report.asymptotic_basis != oracle:
            mismatches.append((i, "verdict", report.reason, exponential, g))
            continue
        if report.order is None:
            continue
        found += 1
        big_m = report.threshold
        top = big_m + 500
        sums = bruteforce.atmost_sumset(member_mask(canon, top), report.order)
        holes = [n for n in range(1, top + 1) if not sums[n]]
        if holes != list(report.exceptions):
            mismatches.append((i, "exceptions", holes[:6], report.exceptions[:6]))
        elif big_m >= 2 and sums[big_m - 1]:
            mismatches.append((i, "threshold", big_m))
    elapsed = time.perf_counter() - t0
    ok = not mismatches
    _line(
        capsys,
        "5",
        ok,
        f"200 random sets, {found} with an order found, mismatches={mismatches[:3]} "
        f"time={elapsed:.1f}s",
    )
    assert ok


@pytest.mark.slow
def test_criterion_6_growth_classification(capsys):
    rng = np.random.default_rng(6)
    mismatches = []
    witness_failures = []
    t0 = time.perf_counter()
    for i in range(500):
        k = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 7))
        if i % 2 == 0:
            machine = random_dfa(rng, k, n)
        else:
            machine = random_nfa(rng, k, min(n, 5), density=float(rng.uniform(0.1, 0.4)))
        report = classify(machine)
        exponential, deg = _growth_oracle(determinize(machine))
        if report.exponential != exponential or (not exponential and report.degree != deg):
            mismatches.append((i, report.exponential, report.degree, exponential, deg))
            continue
        if report.exponential:
            w = report.witness
            m = report.state_count
            dfa = determinize(machine)
            bounds = len(w.s) < m and len(w.v) < m and len(w.t) < 3 * m and len(w.u) < 3 * m
            shape = len(w.t) == len(w.u) and w.t != w.u
            pyrng = random.Random(i)
            inside = all(
                dfa.accepts(w.s + sum((pyrng.choice((w.t, w.u)) for _ in range(r)), ()) + w.v)
                for r in range(5)
                for _ in range(4)
            )
            if not (bounds and shape and inside):
                witness_failures.append((i, m, w))
    family = {}
    for n in (3, 4, 5):
        w = classify(cycle_with_chord(n)).witness
        family[n] = (len(w.t), len(w.u))
    family_ok = all(family[n] == (3 * n - 1, 3 * n - 1) for n in family)
    big_n, big_m = theoretical_bounds(2, 1)
    bounds_ok = (big_n, big_m) == (2621440, 6291456)
    elapsed = time.perf_counter() - t0
    ok = not mismatches and not witness_failures and family_ok and bounds_ok
    _line(
        capsys,
        "6",
        ok,
        f"500 random machines: verdict mismatches={len(mismatches)} witness failures="
        f"{len(witness_failures)}; cycle-with-chord |t|,|u| by n={family}; "
        f"N,M(k=2,m=1)=({big_n}, {big_m}) time={elapsed:.1f}s",
    )
    assert ok


def test_criterion_7_cantor_exact(capsys):
    t0 = time.perf_counter()
    rnd = random.Random(7)
    failures = []
    classical = cantor_params(3, (), (0,), (2,))
    if not check_selfsimilarity(classical, 8):
        failures.append("self-similarity at depth 8")
    if mfold_interval(classical, 2) != Interval(Fraction(0), Fraction(2)):
        failures.append("2-fold classical sum")
    for _ in range(100):
        k = rnd.randint(2, 4)
        s = rnd.randint(1, 2)
        L = rnd.randint(0, 2)
        y = tuple(rnd.randrange(k) for _ in range(s))
        z = y
        while z == y:
            z = tuple(rnd.randrange(k) for _ in range(s))
        u = tuple(rnd.randrange(k) for _ in range(L))
        p = cantor_params(k, u, y, z)
        factor = 1 / (1 - Fraction(1, k**s))
        if p.alpha != factor * p.Y or p.beta != factor * p.Z or not p.Y < p.Z:
            failures.append(("endpoints", k, u, y, z))
        m = overlap_threshold(p)
        lo, hi = p.interval
        least = (m + 1) * lo <= m * hi and (m == 1 or not m * lo <= (m - 1) * hi)
        if not (least and m <= k ** (L + s) + k**s):
            failures.append(("overlap", k, u, y, z, m))
        t = rnd.randint(1, 3)
        if interval_sum_bound(p, t) != k ** (2 * L + 2 * s + t + 1):
            failures.append(("bound", k, L, s, t))
    if interval_sum_bound(cantor_params(2, (), (0,), (1,)), 1) != 16:
        failures.append("bound k=2")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 10
    _line(capsys, "7", ok, f"failures={failures[:3]} time={elapsed:.2f}s (<10s)")
    assert ok


def _random_set(rng):
    k = int(rng.choice([2, 3]))
    return minimize(random_dfa(rng, k, int(rng.integers(1, 5))))


def _brute_exact(members, j, bound, distinct):
    """Sorted sums (and ordered-tuple counts) by direct enumeration."""
    counts = [0] * (bound + 1)

    def rec(start_total, depth, used):
        for x in members:
            total = start_total + x
            if total > bound:
                break
            if distinct and x in used:
                continue
            if depth == 1:
                counts[total] += 1
            else:
                rec(total, depth - 1, used | {x})

    rec(0, j, frozenset())
    return counts


@pytest.mark.slow
def test_criterion_8_sumset_oracle(capsys):
    rng = np.random.default_rng(8)
    bound = 1000
    mismatches = []
    cases = 0
    t0 = time.perf_counter()
    for i in range(40):
        a = _random_set(rng)
        canon = canonicalize(a)
        mask = member_mask(canon, bound)
        members = [int(x) for x in np.nonzero(mask)[0]]
        if is_empty(canon):
            continue
        for j in (1, 2, 3):
            cases += 1
            exact = bruteforce.sumset([mask] * j)
            atmost = bruteforce.atmost_sumset(mask, j)
            small = members if len(members) <= 60 else members[:60]
            cut = small[-1] if len(small) < len(members) else bound
            cut = min(cut, bound)
            brute_counts = _brute_exact(small, j, cut, False)
            brute_distinct = _brute_exact(small, j, cut, True)
            for mode, truth in ((EXACT, exact), (ATMOST, atmost)):
                got = member_mask(sum_automaton(SumSpec.power(a, j, mode=mode)), bound)
                if not np.array_equal(got, truth):
                    mismatches.append((i, j, mode))
            got = member_mask(sum_automaton(SumSpec.power(a, j, distinct=True)), bound)
            truth_distinct = bruteforce.distinct_counts(mask, j) > 0
            if not np.array_equal(got, truth_distinct):
                mismatches.append((i, j, "distinct"))
            plain = representation_counter(SumSpec.power(a, j))
            dist = representation_counter(SumSpec.power(a, j, distinct=True))
            for n in range(cut + 1):
                if plain(n) != brute_counts[n] or dist(n) != brute_distinct[n]:
                    mismatches.append((i, j, "count", n))
                    break
    elapsed = time.perf_counter() - t0
    ok = not mismatches
    _line(
        capsys,
        "8",
        ok,
        f"{cases} (set, j) cases in exact/atmost/distinct modes on [0, {bound}], "
        f"counts vs direct enumeration; mismatches={mismatches[:3]} time={elapsed:.1f}s",
    )
    assert ok
