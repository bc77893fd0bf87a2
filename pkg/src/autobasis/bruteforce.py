"""Direct enumeration over ``[0, bound]``: the reference the automata are
tested against.  Nothing here looks at automaton structure beyond
membership of individual numbers."""

import numpy as np

from . import _kernels
from .numeral import member_mask


def indicator(a, bound):
    return member_mask(a, bound)


def sumset(masks):
    """Indicator of ``S_1 + ... + S_j`` on ``[0, bound]``."""
    out = masks[0]
    for m in masks[1:]:
        out = _kernels.sumset_mask(out, m)
    return out


def atmost_sumset(mask, j):
    """Indicator of the sums of between 1 and j members."""
    acc = mask.copy()
    cur = mask
    for _ in range(j - 1):
        cur = _kernels.sumset_mask(cur, mask)
        acc |= cur
    return acc


def ordered_counts(masks):
    """``out[n]`` = number of ordered tuples (x_1, ..., x_j), x_i in S_i, with sum n."""
    out = masks[0].astype(np.int64)
    for m in masks[1:]:
        out = _kernels.convolve_counts(out, m.astype(np.int64))
    return out


def distinct_counts(mask, j):
    """Ordered j-tuples of pairwise distinct members summing to n, j <= 3."""
    size = mask.shape[0]
    s = mask.astype(np.int64)
    if j == 1:
        return s
    total = ordered_counts([mask] * j)
    # tuples with x_1 == x_2 contribute 2x (+ y when j == 3)
    doubled = np.zeros(size, np.int64)
    doubled[0::2] = s[: (size + 1) // 2]
    if j == 2:
        return total - doubled
    if j != 3:
        raise ValueError("distinct counts are implemented for j <= 3")
    pairs = _kernels.convolve_counts(doubled, s)
    tripled = np.zeros(size, np.int64)
    tripled[0::3] = s[: (size + 2) // 3]
    return total - 3 * pairs + 2 * tripled
