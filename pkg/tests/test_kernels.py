import importlib
import itertools

import numpy as np
import pytest

from autobasis import _kernels, bruteforce
from autobasis.corpus import corpus

from conftest import random_dfa

def _same_partition(x, y):
    pairs = set(zip(x.tolist(), y.tolist()))
    return len(pairs) == len(set(x.tolist())) == len(set(y.tolist()))


@pytest.mark.parametrize("seed", range(20))
def test_refine_backends_agree(seed):
    rng = np.random.default_rng(seed)
    a = random_dfa(rng, int(rng.integers(2, 5)), int(rng.integers(1, 30)))
    labels = a.finals.astype(np.int64)
    for _ in range(a.n_states):
        x, nx = _kernels.refine_numba(a.delta, labels)
        y, ny = _kernels.refine_numpy(a.delta, labels)
        assert nx == ny and _same_partition(x, y)
        labels = y


@pytest.mark.parametrize("seed", range(10))
def test_member_mask_backends_agree(seed):
    rng = np.random.default_rng(seed)
    a = random_dfa(rng, int(rng.integers(2, 5)), int(rng.integers(1, 12)))
    args = (a.delta, a.finals, a.initial, 3000)
    assert np.array_equal(_kernels.member_mask_numba(*args), _kernels.member_mask_numpy(*args))


@pytest.mark.parametrize("seed", range(10))
def test_set_arithmetic_backends_agree(seed):
    rng = np.random.default_rng(seed)
    a = rng.random(500) < 0.2
    b = rng.random(500) < 0.3
    assert np.array_equal(_kernels.sumset_mask_numba(a, b), _kernels.sumset_mask_numpy(a, b))
    assert np.array_equal(
        _kernels.convolve_counts_numba(a, b), _kernels.convolve_counts_numpy(a, b)
    )


def test_sumset_mask_matches_definition():
    a = np.zeros(40, bool)
    a[[1, 5, 9]] = True
    b = np.zeros(40, bool)
    b[[0, 2, 30]] = True
    expected = {x + y for x in (1, 5, 9) for y in (0, 2, 30) if x + y < 40}
    assert set(np.nonzero(_kernels.sumset_mask(a, b))[0].tolist()) == expected


@pytest.mark.parametrize("j", [1, 2, 3])
@pytest.mark.parametrize("name", ["evil2", "rudinshapiro2", "digits01base4"])
def test_distinct_counts_against_enumeration(name, j):
    bound = 60
    mask = bruteforce.indicator(corpus(name).machine, bound)
    members = np.nonzero(mask)[0].tolist()
    expected = np.zeros(bound + 1, np.int64)
    for combo in itertools.permutations(members, j):
        if sum(combo) <= bound:
            expected[sum(combo)] += 1
    assert np.array_equal(bruteforce.distinct_counts(mask, j), expected)


def test_atmost_sumset():
    mask = np.zeros(20, bool)
    mask[[3, 7]] = True
    got = set(np.nonzero(bruteforce.atmost_sumset(mask, 2))[0].tolist())
    assert got == {3, 7, 6, 10, 14}


def test_backend_env_flag(monkeypatch):
    monkeypatch.setenv("AUTOBASIS_BACKEND", "numpy")
    module = importlib.reload(_kernels)
    try:
        assert module.refine is module.refine_numpy
        assert module.BACKEND == "numpy"
    finally:
        monkeypatch.delenv("AUTOBASIS_BACKEND")
        importlib.reload(_kernels)
