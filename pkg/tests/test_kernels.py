"""Compiled and pure-numpy kernels must agree; the set-cover driver must be exact."""

import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nct import _kernels
from nct.setcover import InfeasibleCover, _to_words, greedy_cover, min_set_cover


def brute_cover(sets, m, weights):
    best = None
    for r in range(m + 1):
        for combo in combinations(range(m), r):
            chosen = set(combo)
            if all(s & chosen for s in sets):
                w = sum(weights[c] for c in combo)
                if best is None or w < best[0] or (w == best[0] and combo < best[1]):
                    best = (w, combo)
    return best


instances = st.integers(2, 9).flatmap(
    lambda m: st.tuples(
        st.just(m),
        st.lists(st.frozensets(st.integers(0, m - 1), min_size=1, max_size=m), min_size=1, max_size=12),
        st.lists(st.integers(1, 3), min_size=m, max_size=m),
    )
)


@settings(max_examples=150, deadline=None)
@given(instances)
def test_min_set_cover_matches_brute_force(inst):
    m, sets, weights = inst
    res = min_set_cover(sets, m, weights=weights)
    w, combo = brute_cover(sets, m, weights)
    assert res.certified
    assert res.value == w
    assert all(s & set(res.witness) for s in sets)


@settings(max_examples=80, deadline=None)
@given(instances)
def test_unit_weights_lex_least(inst):
    m, sets, _ = inst
    ones = [1] * m
    res = min_set_cover(sets, m)
    assert (res.value, res.witness) == brute_cover(sets, m, ones)


def _run_kernel(fn, sets, m, weights):
    n_words = (m + 63) // 64
    masks = np.stack([_to_words(s, n_words) for s in sets])
    minw = np.array([min(weights[c] for c in s) for s in sets], dtype=np.int64)
    w = np.array(weights, dtype=np.int64)
    state = np.zeros(5, dtype=np.int64)
    inc = greedy_cover(sets, weights)
    state[_kernels.S_BEST] = sum(weights[c] for c in inc) + 1
    phase = np.zeros(m + 1, dtype=np.int64)
    chosen = np.zeros(n_words, dtype=np.uint64)
    excluded = np.zeros(n_words, dtype=np.uint64)
    best = _to_words(inc, n_words)
    # tiny node budget to exercise pause/resume
    while fn(masks, minw, w, m, state, phase, chosen, excluded, best, 7) != _kernels.DONE:
        pass
    return int(state[_kernels.S_BEST]), best.tolist(), int(state[_kernels.S_NODES])


def test_cover_kernels_agree_including_multiword():
    rng = random.Random(3)
    for trial in range(40):
        m = rng.choice([5, 12, 70, 130])
        sets = [frozenset(rng.sample(range(m), rng.randint(1, min(m, 6)))) for _ in range(rng.randint(3, 25))]
        weights = [rng.randint(1, 2) for _ in range(m)]
        a = _run_kernel(_kernels._cover_search_py, sets, m, weights)
        b = _run_kernel(_kernels._cover_search_nb, sets, m, weights)
        assert a == b


@given(
    st.integers(2, 40).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 1), min_size=n, max_size=n), st.lists(st.integers(0, 1), min_size=n, max_size=n))
    )
)
def test_counting_kernels_agree(data):
    n, a, b = data
    a = np.array(a, dtype=np.int64)
    b = np.array(b, dtype=np.int64)
    r1 = _kernels._representation_counts_py(a, b)
    r2 = _kernels._representation_counts_nb(a, b)
    assert np.array_equal(r1, r2)
    expect = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            expect[(i + j) % n] += a[i] * b[j]
    assert np.array_equal(r1, expect)
    assert _kernels._count_triples_py(a) == _kernels._count_triples_nb(a)


def test_infeasible_and_trivial():
    with pytest.raises(InfeasibleCover):
        min_set_cover([frozenset({0}), frozenset()], 2)
    assert min_set_cover([], 3).value == 0
    with pytest.raises(ValueError):
        min_set_cover([frozenset({5})], 3)


def test_budget_leaves_result_uncertified():
    # sum-free hitting sets at a large prime do not finish in one chunk
    from nct.addcomb import _orbit_model, ExtremalProblem

    orbs, patterns = _orbit_model(ExtremalProblem("coprime-sum-free", 97))
    res = min_set_cover(patterns, len(orbs), weights=[len(o) for o in orbs], time_budget=1e-3, chunk=1000)
    assert not res.certified
    chosen = set(res.witness)
    assert all(p & chosen for p in patterns)
