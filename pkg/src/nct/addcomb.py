"""Sumsets, popular sums, and exact extremal searches for symmetric
coprime-sum-free and coprime-cube-free sets.

Conventions: additive triples are counted as ordered pairs (x, y) with
x + y in X. Sum-free variants live in Z/n (x = 0 allowed, with
gcd(0, a, n) = gcd(a, n)); cube variants live in {1, ..., n-1} with
ordinary integer sums.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import _kernels
from .arith import prime_divisors
from .setcover import min_set_cover
from .symmetric import INTEGERS, RESIDUES, SymmetricSubset, orbits

COPRIME_SUM_FREE = "coprime-sum-free"
RESTRICTED_TRIPLE_FREE = "restricted-triple-free"
COPRIME_CUBE_FREE = "coprime-cube-free"
DEGENERATE_CUBE_FREE = "degenerate-cube-free"
DEGENERATE_CUBE_EVEN_FREE = "degenerate-cube-even-free"
VARIANTS = (
    COPRIME_SUM_FREE,
    RESTRICTED_TRIPLE_FREE,
    COPRIME_CUBE_FREE,
    DEGENERATE_CUBE_FREE,
    DEGENERATE_CUBE_EVEN_FREE,
)
SUM_VARIANTS = (COPRIME_SUM_FREE, RESTRICTED_TRIPLE_FREE)


@dataclass(frozen=True)
class ExtremalProblem:
    variant: str
    n: int
    symmetric: bool = True

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")
        if not self.symmetric:
            raise ValueError("only symmetric extremal problems are supported")
        if self.variant == DEGENERATE_CUBE_EVEN_FREE and self.n % 2:
            raise ValueError("the even-x degenerate cube variant needs even n")

    @property
    def ambient(self) -> str:
        return RESIDUES if self.variant in SUM_VARIANTS else INTEGERS


@dataclass(frozen=True)
class ExtremalResult:
    maximum: int
    witness: SymmetricSubset
    method: str
    certified: bool
    nodes: int = 0
    elapsed: float = 0.0

    def to_row(self, problem: ExtremalProblem | None = None) -> dict:
        row = {}
        if problem is not None:
            row.update(variant=problem.variant, n=problem.n)
        row.update(
            maximum=self.maximum,
            certified=self.certified,
            method=self.method,
            witness=self.witness.sorted(),
        )
        return row


def _indicator(A: Iterable[int], n: int) -> np.ndarray:
    ind = np.zeros(n, dtype=np.int64)
    for a in A:
        ind[a % n] = 1
    return ind


def sumset(A: Iterable[int], B: Iterable[int], n: int) -> set[int]:
    A, B = {a % n for a in A}, {b % n for b in B}
    return {(a + b) % n for a in A for b in B}


def popular_sums(A: Iterable[int], B: Iterable[int], n: int, K: int) -> set[int]:
    """Elements of Z/n with at least K representations a + b, (a, b) in A x B."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    r = _kernels.representation_counts(_indicator(A, n), _indicator(B, n))
    return {int(x) for x in np.flatnonzero(r >= K)}


def count_additive_triples(X: Iterable[int], n: int) -> int:
    """#{(x, y) in X x X : x + y in X}, ordered pairs."""
    return int(_kernels.count_triples(_indicator(X, n)))


def cube_set(x: int, y: int, z: int) -> set[int]:
    return {x, y, z, x + y, x + z, y + z, x + y + z}


def _sum_patterns(variant: str, n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(witness, elements) for every forbidden configuration of a sum variant."""
    if variant == COPRIME_SUM_FREE:
        for x in range(n):
            for y in range(x, n):
                if gcd(gcd(x, y), n) == 1:
                    yield (x, y, (x + y) % n), (x, y, (x + y) % n)
    else:
        for h in (1, 2, 4):
            for x in range(n):
                if gcd(gcd(x, h), n) == 1:
                    trip = (x, (x + h) % n, (2 * x + h) % n)
                    yield (x, h) + trip[2:], trip


def _cube_patterns(variant: str, n: int):
    if variant == COPRIME_CUBE_FREE:
        for x in range(1, n):
            for y in range(x, n):
                for z in range(y, n - x - y):
                    if gcd(gcd(gcd(x, y), z), n) == 1:
                        yield (x, y, z), tuple(sorted(cube_set(x, y, z)))
        return
    step = 2 if variant == DEGENERATE_CUBE_EVEN_FREE else 1
    for h in (1, -1):
        x = step
        while 3 * x + h <= n - 1:
            if x + h >= 1:
                yield (x, x, x + h), tuple(sorted(cube_set(x, x, x + h)))
            x += step


def forbidden_patterns(problem: ExtremalProblem):
    if problem.ambient == RESIDUES:
        return _sum_patterns(problem.variant, problem.n)
    return _cube_patterns(problem.variant, problem.n)


def is_free(X: SymmetricSubset | Iterable[int], problem: ExtremalProblem) -> tuple[bool, tuple[int, ...] | None]:
    """(True, None) if X avoids every forbidden pattern, else (False, violating pattern)."""
    if isinstance(X, SymmetricSubset):
        if X.ambient != problem.ambient or X.n != problem.n:
            raise ValueError(
                f"set lives in {X.ambient} mod {X.n}, problem needs {problem.ambient} mod {problem.n}"
            )
        els = X.elements
    else:
        els = frozenset(X)
        lo = 0 if problem.ambient == RESIDUES else 1
        if any(not lo <= x <= problem.n - 1 for x in els):
            raise ValueError(f"elements outside the {problem.ambient} ambient for n={problem.n}")
    for witness, pattern in forbidden_patterns(problem):
        if all(p in els for p in pattern):
            return False, witness
    return True, None


def _orbit_model(problem: ExtremalProblem):
    # largest orbits first, so ties are broken toward keeping small elements
    orbs = orbits(problem.n, problem.ambient)[::-1]
    where = {x: i for i, o in enumerate(orbs) for x in o}
    patterns = {frozenset(where[p] for p in pat) for _, pat in forbidden_patterns(problem)}
    return orbs, sorted(patterns, key=sorted)


def max_extremal(problem: ExtremalProblem, time_budget: float | None = None) -> ExtremalResult:
    """Largest symmetric set free of the variant's patterns.

    Cast as minimum-weight hitting set over reflection orbits: the removed
    orbits must meet every forbidden pattern. Certified once the search
    tree is exhausted; with a time budget the best set found is returned
    uncertified.
    """
    orbs, patterns = _orbit_model(problem)
    weights = [len(o) for o in orbs]
    total = sum(weights)
    if patterns:
        res = min_set_cover(patterns, len(orbs), weights=weights, time_budget=time_budget)
        removed, certified, nodes, elapsed = set(res.witness), res.certified, res.nodes, res.elapsed
    else:
        removed, certified, nodes, elapsed = set(), True, 0, 0.0
    kept = [x for i, o in enumerate(orbs) if i not in removed for x in o]
    witness = SymmetricSubset.of(problem.n, problem.ambient, kept)
    return ExtremalResult(total - sum(weights[i] for i in removed), witness, "branch-and-bound", certified, nodes, elapsed)


TWO_PRIMES = "two-primes"
NO_MULT_3 = "no-mult-3"
MIDDLE_THIRD = "middle-third"
CONSTRUCTIONS = (TWO_PRIMES, NO_MULT_3, MIDDLE_THIRD)


def known_construction(tag: str, n: int) -> SymmetricSubset:
    if tag == TWO_PRIMES:
        ps = prime_divisors(n)
        if len(ps) < 2:
            raise ValueError(f"two-primes construction needs at least two prime factors, n={n}")
        p1, p2 = ps[:2]
        return SymmetricSubset.of(n, RESIDUES, (x for x in range(n) if x % p1 == 0 or x % p2 == 0))
    if tag == NO_MULT_3:
        if n % 3:
            raise ValueError(f"no-mult-3 construction is symmetric only when 3 | n, n={n}")
        return SymmetricSubset.of(n, INTEGERS, (x for x in range(1, n) if x % 3))
    if tag == MIDDLE_THIRD:
        return SymmetricSubset.of(n, RESIDUES, (x for x in range(n) if n < 3 * x < 2 * n))
    raise ValueError(f"unknown construction {tag!r}; expected one of {CONSTRUCTIONS}")
