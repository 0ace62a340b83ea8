"""Exact minimum (weighted) set cover by branch and bound.

The universe is given as, for each element, the set of candidate indices
covering it. Elements whose candidate set contains another element's are
dropped first (covering the smaller one covers them too).
"""

from __future__ import annotations

import time
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels


class InfeasibleCover(ValueError):
    """Some element has no candidate covering it."""

    def __init__(self, element_index: int, message: str | None = None):
        self.element_index = element_index
        super().__init__(message or f"element {element_index} is covered by no candidate")


@dataclass(frozen=True)
class CoverResult:
    value: int
    witness: tuple[int, ...]
    certified: bool
    nodes: int
    elapsed: float


def _reduce(sets: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    uniq = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in uniq:
        if not any(t <= s for t in kept):
            kept.append(s)
    return kept


def greedy_cover(sets: Sequence[frozenset[int]], weights: Sequence[int]) -> list[int]:
    uncovered = list(range(len(sets)))
    chosen: list[int] = []
    while uncovered:
        gain: dict[int, int] = {}
        for e in uncovered:
            for c in sets[e]:
                gain[c] = gain.get(c, 0) + 1
        c = min(gain, key=lambda c: (weights[c] / gain[c], c))
        chosen.append(c)
        uncovered = [e for e in uncovered if c not in sets[e]]
    return sorted(chosen)


def _to_words(indices, n_words):
    row = np.zeros(n_words, dtype=np.uint64)
    for c in indices:
        row[c // 64] |= np.uint64(1) << np.uint64(c % 64)
    return row


def _from_words(row) -> tuple[int, ...]:
    out = []
    for k, word in enumerate(row):
        word = int(word)
        while word:
            low = word & -word
            out.append(64 * k + low.bit_length() - 1)
            word ^= low
    return tuple(out)


def min_set_cover(
    sets: Sequence[frozenset[int] | set[int]],
    n_candidates: int,
    weights: Sequence[int] | None = None,
    time_budget: float | None = None,
    chunk: int = 200_000,
) -> CoverResult:
    """Minimum-weight set of candidates meeting every element's candidate set.

    Among optimal covers the lexicographically least (as a sorted index
    tuple) is returned. With a time budget the search may stop early; the
    result is then the best cover found and ``certified`` is False.
    """
    t0 = time.perf_counter()
    weights = [1] * n_candidates if weights is None else [int(w) for w in weights]
    sets = [frozenset(s) for s in sets]
    for e, s in enumerate(sets):
        if not s:
            raise InfeasibleCover(e)
        if max(s) >= n_candidates or min(s) < 0:
            raise ValueError(f"element {e} refers to a candidate outside [0, {n_candidates})")
    if not sets:
        return CoverResult(0, (), True, 0, 0.0)
    reduced = _reduce(sets)
    incumbent = greedy_cover(reduced, weights)
    n_words = (n_candidates + 63) // 64
    masks = np.stack([_to_words(s, n_words) for s in reduced])
    minw = np.array([min(weights[c] for c in s) for s in reduced], dtype=np.int64)
    w_arr = np.array(weights, dtype=np.int64)
    state = np.zeros(5, dtype=np.int64)
    # one above the incumbent so the search reproduces the lex-least optimum
    state[_kernels.S_BEST] = sum(weights[c] for c in incumbent) + 1
    phase = np.zeros(n_candidates + 1, dtype=np.int64)
    chosen = np.zeros(n_words, dtype=np.uint64)
    excluded = np.zeros(n_words, dtype=np.uint64)
    best_chosen = _to_words(incumbent, n_words)
    certified = True
    while True:
        status = _kernels.cover_search(
            masks, minw, w_arr, n_candidates, state, phase, chosen, excluded, best_chosen, chunk
        )
        if status == _kernels.DONE:
            break
        if time_budget is not None and time.perf_counter() - t0 > time_budget:
            certified = False
            break
    witness = _from_words(best_chosen)
    value = sum(weights[c] for c in witness)
    return CoverResult(value, witness, certified, int(state[_kernels.S_NODES]), time.perf_counter() - t0)
