"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--size 20000]

The first numba call compiles (or loads the on-disk cache), so it is timed
separately and left out of the per-call figures.
"""

import argparse
import time

import numpy as np

from autobasis import _kernels
from autobasis.corpus import corpus
from autobasis.numeral import member_mask


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def random_dfa(n, k, rng):
    delta = rng.integers(0, n, size=(n, k)).astype(np.int64)
    finals = rng.random(n) < 0.5
    return delta, finals


def cases(size, rng):
    delta, finals = random_dfa(4000, 3, rng)
    labels = finals.astype(np.int64)
    evil = corpus("evil2").machine
    d, f = np.ascontiguousarray(evil.delta), np.ascontiguousarray(evil.finals)
    mask = member_mask(evil, size - 1)
    counts = mask.astype(np.int64)
    return {
        "refine": lambda impl: impl(delta, labels),
        "member_mask": lambda impl: impl(d, f, evil.initial, size - 1),
        "sumset_mask": lambda impl: impl(mask, mask),
        "convolve_counts": lambda impl: impl(counts, counts),
    }


def agree(name, a, b):
    if name != "refine":
        return np.array_equal(a, b)
    # same partition, possibly numbered differently
    pairs = np.unique(np.stack([a[0], b[0]], axis=1), axis=0)
    return a[1] == b[1] == len(pairs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=20_000)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"numba available: {_kernels.HAVE_NUMBA}; default backend: {_kernels.BACKEND}")
    print(f"{'kernel':16s} {'numpy ms':>10s} {'numba ms':>10s} {'compile s':>10s} {'speedup':>8s}")
    for name, call in cases(args.size, rng).items():
        fast = getattr(_kernels, f"{name}_numba")
        slow = getattr(_kernels, f"{name}_numpy")
        t0 = time.perf_counter()
        a = call(fast)
        compile_s = time.perf_counter() - t0
        b = call(slow)
        same = agree(name, a, b)
        t_fast = best_of(lambda: call(fast), args.repeat)
        t_slow = best_of(lambda: call(slow), args.repeat)
        flag = "" if same else "  MISMATCH"
        print(
            f"{name:16s} {t_slow * 1e3:10.2f} {t_fast * 1e3:10.2f} {compile_s:10.2f}"
            f" {t_slow / t_fast:8.1f}{flag}"
        )


if __name__ == "__main__":
    main()
