"""Cycle types of permutations, stored as partitions of n.

Everything in the package works at cycle-type level: a permutation is
identified with the multiset of its cycle lengths.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cache
from math import gcd


@dataclass(frozen=True, order=True)
class CycleType:
    """A partition of ``n`` with parts sorted in descending order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(x) for x in self.parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise ValueError(f"cycle type needs positive parts, got {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> CycleType:
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def sign(self) -> int:
        return -1 if (self.n - self.k) % 2 else 1

    @property
    def part_gcd(self) -> int:
        g = 0
        for x in self.parts:
            g = gcd(g, x)
        return g

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @classmethod
    def parse(cls, text: str) -> CycleType:
        text = text.strip().strip("()[]")
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))


def subset_sum_mask(parts: Sequence[int]) -> int:
    """Bitset whose bit s is set iff s is a sum of some sub-multiset of parts."""
    mask = 1
    for x in parts:
        mask |= mask << x
    return mask


def invariant_set_sizes(t: CycleType) -> set[int]:
    """Sizes of the invariant sets of a permutation of type t (subset sums)."""
    mask = subset_sum_mask(t.parts)
    return {s for s in range(t.n + 1) if mask >> s & 1}


def _partitions(n: int, largest: int, max_parts: int | None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    # parts are non-increasing, so at most max_parts * largest is reachable
    if max_parts is not None and largest * max_parts < n:
        return
    rest = None if max_parts is None else max_parts - 1
    for first in range(min(n, largest), 0, -1):
        for tail in _partitions(n - first, first, rest):
            yield (first,) + tail


def iter_partitions(n: int, max_parts: int | None = None, largest: int | None = None):
    """Partitions of n in descending-lexicographic order."""
    return _partitions(n, n if largest is None else largest, max_parts)


def enumerate_cycle_types(
    n: int, max_parts: int | None = None, sign_filter: int | None = None
) -> list[CycleType]:
    """All cycle types of S_n, optionally capped in cycle count and filtered by sign."""
    if n < 1:
        raise ValueError(f"enumerate_cycle_types needs n >= 1, got {n}")
    if max_parts is not None and not 1 <= max_parts <= n:
        raise ValueError(f"max_parts must lie in [1, {n}], got {max_parts}")
    if sign_filter not in (None, 1, -1):
        raise ValueError(f"sign_filter must be +1, -1 or None, got {sign_filter}")
    out = []
    for parts in iter_partitions(n, max_parts):
        if sign_filter is not None and (-1) ** ((n - len(parts)) % 2) != sign_filter:
            continue
        out.append(CycleType(parts))
    return out


@cache
def _count_table(n: int) -> tuple[tuple[int, int], ...]:
    # row[m] = (even-k count, odd-k count) of partitions of m, built part by part
    table = [[0, 0] for _ in range(n + 1)]
    table[0][0] = 1
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            table[m][0] += table[m - part][1]
            table[m][1] += table[m - part][0]
    return tuple(tuple(r) for r in table)


def count_cycle_types(n: int, sign_filter: int | None = None) -> int:
    """Number of partitions of n, optionally restricted to one sign class."""
    even_k, odd_k = _count_table(n)[n]
    if sign_filter is None:
        return even_k + odd_k
    # sign = (-1)^(n-k): +1 iff k has the parity of n
    same = even_k if n % 2 == 0 else odd_k
    return same if sign_filter == 1 else even_k + odd_k - same
