"""Numeric inner loops: partition refinement and brute-force set arithmetic.

Every kernel exists twice, as a numba ``@njit`` function and as a plain
numpy function with the same signature and the same result.  The public
names at the bottom of the module point at one family or the other:

* numba is used when it imports and ``AUTOBASIS_BACKEND`` is unset or
  ``numba``;
* ``AUTOBASIS_BACKEND=numpy`` forces the pure-numpy path.

Both families stay importable (``*_numba`` / ``*_numpy``) so tests and the
benchmark can compare them directly.
"""

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False


# ---------------------------------------------------------------- numpy path


def refine_numpy(delta, labels):
    """One round of Moore refinement.

    States keep the same class iff they had the same class and their
    successors on every digit had the same classes.  Returns the new labels
    (dense, 0-based) and the number of classes.
    """
    n = delta.shape[0]
    if n == 0:
        return labels.copy(), 0
    cols = [labels] + [labels[delta[:, a]] for a in range(delta.shape[1])]
    sig = np.stack(cols, axis=1)
    _, inv = np.unique(sig, axis=0, return_inverse=True)
    inv = inv.reshape(-1).astype(np.int64)
    return inv, int(inv.max()) + 1


def member_mask_numpy(delta, finals, initial, bound):
    """Boolean array ``m`` with ``m[n]`` true iff the canonical LSD-first
    word of ``n`` is accepted, for ``0 <= n <= bound``."""
    k = delta.shape[1]
    rem = np.arange(bound + 1, dtype=np.int64)
    state = np.full(bound + 1, initial, dtype=np.int64)
    active = rem > 0
    while active.any():
        idx = np.nonzero(active)[0]
        state[idx] = delta[state[idx], rem[idx] % k]
        rem[idx] //= k
        active[idx] = rem[idx] > 0
    return finals[state]


def sumset_mask_numpy(a, b):
    """Indicator of ``{x + y}`` truncated to ``len(a)``; inputs are
    indicators of the same length."""
    size = a.shape[0]
    out = np.zeros(size, dtype=np.bool_)
    for x in np.nonzero(a)[0]:
        out[x:] |= b[: size - x]
    return out


def convolve_counts_numpy(a, b):
    """Truncated integer convolution: ``out[n] = sum a[x] * b[n - x]``."""
    size = a.shape[0]
    return np.convolve(a.astype(np.int64), b.astype(np.int64))[:size]


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def refine_numba(delta, labels):
        n, k = delta.shape
        cur = labels.copy()
        count = 0
        if n == 0:
            return cur, 0
        for a in range(k):
            key = cur * n + labels[delta[:, a]]
            order = np.argsort(key, kind="mergesort")
            new = np.empty(n, np.int64)
            c = -1
            prev = -1
            for idx in order:
                if key[idx] != prev:
                    c += 1
                    prev = key[idx]
                new[idx] = c
            cur = new
            count = c + 1
        return cur, count

    @njit(cache=True)
    def member_mask_numba(delta, finals, initial, bound):
        k = delta.shape[1]
        out = np.zeros(bound + 1, np.bool_)
        for n in range(bound + 1):
            q = initial
            m = n
            while m > 0:
                q = delta[q, m % k]
                m //= k
            out[n] = finals[q]
        return out

    @njit(cache=True)
    def sumset_mask_numba(a, b):
        size = a.shape[0]
        out = np.zeros(size, np.bool_)
        for x in range(size):
            if a[x]:
                for y in range(size - x):
                    if b[y]:
                        out[x + y] = True
        return out

    @njit(cache=True)
    def convolve_counts_numba(a, b):
        size = a.shape[0]
        out = np.zeros(size, np.int64)
        for x in range(size):
            ax = a[x]
            if ax != 0:
                for y in range(size - x):
                    out[x + y] += ax * b[y]
        return out

else:  # pragma: no cover
    refine_numba = refine_numpy
    member_mask_numba = member_mask_numpy
    sumset_mask_numba = sumset_mask_numpy
    convolve_counts_numba = convolve_counts_numpy


def _choose_backend():
    wanted = os.environ.get("AUTOBASIS_BACKEND", "").strip().lower()
    if wanted == "numpy" or not HAVE_NUMBA:
        return "numpy"
    return "numba"


BACKEND = _choose_backend()

if BACKEND == "numba":
    refine = refine_numba
    member_mask = member_mask_numba
    sumset_mask = sumset_mask_numba
    convolve_counts = convolve_counts_numba
else:
    refine = refine_numpy
    member_mask = member_mask_numpy
    sumset_mask = sumset_mask_numpy
    convolve_counts = convolve_counts_numpy
