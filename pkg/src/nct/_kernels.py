"""Hot loops: exact weighted set-cover search and additive counting.

Bitsets over candidates are rows of uint64 words. The search kernel is a
depth-first include/exclude sweep in candidate order, so the first optimum
it meets is the lexicographically least one. It runs for at most
``budget`` nodes per call and keeps its whole state in the arrays passed
in, so callers can resume it and enforce wall-clock limits between calls.

Every kernel has a compiled version (numba) and a numpy version; the module
level names point at whichever ``nct._jit`` selected.
"""

import numpy as np

from ._jit import HAVE_NUMBA, njit

# search status codes
DONE = 0
PAUSED = 1

# state slots
S_DEPTH, S_WEIGHT, S_BEST, S_NODES, S_STATUS = range(5)


def _cover_search_py(masks, minw, weights, m, state, phase, chosen, excluded, best_chosen, budget):
    """numpy version: per-node work vectorized over elements."""
    n_words = masks.shape[1]
    bit_word = np.arange(m) // 64
    bit_val = np.left_shift(np.uint64(1), (np.arange(m) % 64).astype(np.uint64))
    i = int(state[S_DEPTH])
    w = int(state[S_WEIGHT])
    best = int(state[S_BEST])
    nodes = 0
    while True:
        descend = False
        if phase[i] == 0:
            nodes += 1
            uncov = ~np.any(masks & chosen, axis=1)
            if not uncov.any():
                if w < best:
                    best = w
                    best_chosen[:] = chosen
            else:
                avail = masks[uncov] & ~excluded
                ok = np.any(avail, axis=1)
                if ok.all() and i < m:
                    used = np.zeros(n_words, dtype=np.uint64)
                    lb = 0
                    mw = minw[uncov]
                    for r in range(avail.shape[0]):
                        row = avail[r]
                        if not np.any(row & used):
                            used |= row
                            lb += mw[r]
                    if w + lb < best:
                        need = np.bitwise_or.reduce(avail, axis=0)
                        wd, bv = bit_word[i], bit_val[i]
                        if need[wd] & bv:
                            phase[i] = 1
                            chosen[wd] |= bv
                            w += weights[i]
                        else:
                            phase[i] = 2
                            excluded[wd] |= bv
                        i += 1
                        phase[i] = 0
                        descend = True
        elif phase[i] == 1:
            wd, bv = bit_word[i], bit_val[i]
            chosen[wd] &= ~bv
            w -= weights[i]
            phase[i] = 2
            excluded[wd] |= bv
            i += 1
            phase[i] = 0
            descend = True
        else:
            excluded[bit_word[i]] &= ~bit_val[i]
        if not descend:
            if i == 0:
                state[S_STATUS] = DONE
                break
            i -= 1
        if nodes >= budget:
            state[S_STATUS] = PAUSED
            break
    state[S_DEPTH] = i
    state[S_WEIGHT] = w
    state[S_BEST] = best
    state[S_NODES] += nodes
    return state[S_STATUS]


@njit
def _cover_search_nb(masks, minw, weights, m, state, phase, chosen, excluded, best_chosen, budget):
    n_elem, n_words = masks.shape
    used = np.zeros(n_words, dtype=np.uint64)
    need = np.zeros(n_words, dtype=np.uint64)
    one = np.uint64(1)
    i = state[S_DEPTH]
    w = state[S_WEIGHT]
    best = state[S_BEST]
    nodes = 0
    while True:
        descend = False
        if phase[i] == 0:
            nodes += 1
            any_uncov = False
            feasible = True
            lb = 0
            for k in range(n_words):
                used[k] = 0
                need[k] = 0
            for e in range(n_elem):
                hit = False
                for k in range(n_words):
                    if masks[e, k] & chosen[k]:
                        hit = True
                        break
                if hit:
                    continue
                any_uncov = True
                nonempty = False
                disjoint = True
                for k in range(n_words):
                    a = masks[e, k] & ~excluded[k]
                    if a:
                        nonempty = True
                        need[k] |= a
                        if a & used[k]:
                            disjoint = False
                if not nonempty:
                    feasible = False
                    break
                if disjoint:
                    for k in range(n_words):
                        used[k] |= masks[e, k] & ~excluded[k]
                    lb += minw[e]
            if not any_uncov:
                if w < best:
                    best = w
                    for k in range(n_words):
                        best_chosen[k] = chosen[k]
            elif feasible and i < m and w + lb < best:
                wd = i // 64
                bv = one << np.uint64(i % 64)
                if need[wd] & bv:
                    phase[i] = 1
                    chosen[wd] |= bv
                    w += weights[i]
                else:
                    phase[i] = 2
                    excluded[wd] |= bv
                i += 1
                phase[i] = 0
                descend = True
        elif phase[i] == 1:
            wd = i // 64
            bv = one << np.uint64(i % 64)
            chosen[wd] &= ~bv
            w -= weights[i]
            phase[i] = 2
            excluded[wd] |= bv
            i += 1
            phase[i] = 0
            descend = True
        else:
            excluded[i // 64] &= ~(one << np.uint64(i % 64))
        if not descend:
            if i == 0:
                state[S_STATUS] = DONE
                break
            i -= 1
        if nodes >= budget:
            state[S_STATUS] = PAUSED
            break
    state[S_DEPTH] = i
    state[S_WEIGHT] = w
    state[S_BEST] = best
    state[S_NODES] += nodes
    return state[S_STATUS]


def _representation_counts_py(a_ind, b_ind):
    """r[x] = #{(a, b) : a + b = x mod n} for indicator vectors a_ind, b_ind."""
    n = a_ind.shape[0]
    full = np.convolve(a_ind.astype(np.int64), b_ind.astype(np.int64))
    out = full[:n].copy()
    out[: full.shape[0] - n] += full[n:]
    return out


@njit
def _representation_counts_nb(a_ind, b_ind):
    n = a_ind.shape[0]
    out = np.zeros(n, dtype=np.int64)
    for a in range(n):
        if a_ind[a]:
            for b in range(n):
                if b_ind[b]:
                    out[(a + b) % n] += 1
    return out


def _count_triples_py(ind):
    r = _representation_counts_py(ind, ind)
    return int(r[ind.astype(bool)].sum())


@njit
def _count_triples_nb(ind):
    n = ind.shape[0]
    total = 0
    for x in range(n):
        if ind[x]:
            for y in range(n):
                if ind[y] and ind[(x + y) % n]:
                    total += 1
    return total


if HAVE_NUMBA:
    cover_search = _cover_search_nb
    representation_counts = _representation_counts_nb
    count_triples = _count_triples_nb
else:
    cover_search = _cover_search_py
    representation_counts = _representation_counts_py
    count_triples = _count_triples_py
