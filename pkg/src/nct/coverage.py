"""When does a conjugate of a given subgroup class contain an element of a given cycle type?"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, lru_cache
from itertools import permutations
from math import gcd

from .arith import divisors, is_prime, prime_divisors
from .catalog import CatalogEntry, primitive_catalog
from .cycletypes import CycleType, subset_sum_mask

INTRANSITIVE = "intransitive"
IMPRIMITIVE = "imprimitive"
AFFINE = "affine"
PRIMITIVE = "primitive"
ALTERNATING = "alternating"
KINDS = (INTRANSITIVE, IMPRIMITIVE, AFFINE, PRIMITIVE, ALTERNATING)


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups of S_n (intersected with A_n when group='A').

    ``param`` is k for S_k x S_{n-k}, the block size b for S_b wr S_{n/b} and
    p for AGL_1(p). The primitive wildcard carries its catalog entries.
    """

    kind: str
    n: int
    param: int | None = None
    entries: tuple[CatalogEntry, ...] = ()
    group: str = "S"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown subgroup kind {self.kind!r}")
        if self.group not in ("S", "A"):
            raise ValueError(f"group must be 'S' or 'A', got {self.group!r}")
        n, p = self.n, self.param
        if self.kind == INTRANSITIVE:
            if p is None or not 1 <= p <= n // 2:
                raise ValueError(f"intransitive class needs 1 <= k <= n/2, got k={p}, n={n}")
        elif self.kind == IMPRIMITIVE:
            if p is None or not 1 < p < n or n % p:
                raise ValueError(f"block size {p} is not a nontrivial proper divisor of {n}")
        elif self.kind == AFFINE:
            if p != n or not is_prime(n):
                raise ValueError(f"AGL_1(p) needs p = n prime, got p={p}, n={n}")
        elif self.kind == PRIMITIVE:
            if not self.entries:
                raise ValueError("primitive wildcard needs at least one catalog entry")
        elif self.kind == ALTERNATING and self.group != "S":
            raise ValueError("A_n is not a proper subgroup of itself")

    @classmethod
    def intransitive(cls, k: int, n: int, group: str = "S") -> SubgroupClass:
        """S_k x S_{n-k}, normalized so that k <= n/2."""
        return cls(INTRANSITIVE, n, min(k, n - k), group=group)

    @classmethod
    def imprimitive(cls, b: int, n: int, group: str = "S") -> SubgroupClass:
        return cls(IMPRIMITIVE, n, b, group=group)

    @classmethod
    def affine(cls, p: int, group: str = "S") -> SubgroupClass:
        return cls(AFFINE, p, p, group=group)

    @classmethod
    def alternating(cls, n: int) -> SubgroupClass:
        return cls(ALTERNATING, n)

    @classmethod
    def wildcard(cls, n: int, group: str = "S") -> SubgroupClass | None:
        entries, _ = primitive_catalog(n)
        return cls(PRIMITIVE, n, entries=entries, group=group) if entries else None

    @property
    def label(self) -> str:
        if self.kind == INTRANSITIVE:
            return f"S{self.param}xS{self.n - self.param}"
        if self.kind == IMPRIMITIVE:
            return f"S{self.param}wrS{self.n // self.param}"
        if self.kind == AFFINE:
            return f"AGL1({self.param})"
        if self.kind == ALTERNATING:
            return f"A{self.n}"
        return f"Prim{self.n}[{len(self.entries)}]"

    def to_row(self) -> dict:
        row = {"kind": self.kind, "param": self.param}
        if self.kind == PRIMITIVE:
            row["entries"] = [e.to_row() for e in self.entries]
        return row

    def __str__(self) -> str:
        return self.label


@lru_cache(maxsize=1 << 16)
def _sums(parts: tuple[int, ...]) -> int:
    return subset_sum_mask(parts)


def _check_degree(n: int, t: CycleType):
    if t.n != n:
        raise ValueError(f"cycle type {t} has degree {t.n}, expected {n}")


def covers_intransitive(k: int, t: CycleType) -> bool:
    n = t.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in [1, {n - 1}], got {k}")
    return bool(_sums(t.parts) >> k & 1)


@lru_cache(maxsize=1 << 16)
def _imprimitive_exact(b: int, parts: tuple[int, ...]) -> bool:
    # Group the cycles into invariant sets A_i with |A_i| = d_i * b and
    # d_i dividing every cycle length inside A_i. Cycles go in descending
    # order; each joins an open set or opens a new one.
    k = len(parts)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + parts[i]

    @cache
    def go(i: int, open_sets: tuple[tuple[int, int], ...]) -> bool:
        if sum(r for _, r in open_sets) > suffix[i]:
            return False
        if i == k:
            return not open_sets
        x = parts[i]
        for j, (d, rem) in enumerate(open_sets):
            if x % d == 0 and x <= rem:
                rest = open_sets[:j] + open_sets[j + 1 :]
                if rem > x:
                    rest = tuple(sorted(rest + ((d, rem - x),)))
                if go(i + 1, rest):
                    return True
        for d in sorted(divisors(x), reverse=True):
            if d * b < x:
                break
            rest = open_sets
            if d * b > x:
                rest = tuple(sorted(rest + ((d, d * b - x),)))
            if go(i + 1, rest):
                return True
        return False

    return go(0, ())


def covers_imprimitive_exact(b: int, t: CycleType) -> bool:
    """Whether some conjugate of S_b wr S_{n/b} contains an element of type t."""
    n = t.n
    if not 1 < b < n or n % b:
        raise ValueError(f"block size {b} is not a nontrivial proper divisor of {n}")
    return _imprimitive_exact(b, t.parts)


def _set_partitions(k: int):
    # restricted growth strings
    labels = [0] * k

    def rec(i, used):
        if i == k:
            yield list(labels)
            return
        for c in range(used + 1):
            labels[i] = c
            yield from rec(i + 1, max(used, c + 1))

    if k:
        labels[0] = 0
        yield from rec(1, 1)


def _block_partition_test(parts: tuple[int, ...]) -> int | None:
    k = len(parts)
    for labels in _set_partitions(k):
        cells = max(labels) + 1
        if cells in (1, k):
            continue
        sums = [0] * cells
        for x, c in zip(parts, labels):
            sums[c] += x
        b = 0
        for s in sums:
            b = gcd(b, s)
        if all(x % (sums[c] // b) == 0 for x, c in zip(parts, labels)):
            return b
    return None


def covered_by_some_imprimitive(t: CycleType) -> tuple[bool, int | None]:
    """(covered, block size witness) over all imprimitive maximal subgroups of S_n."""
    n = t.n
    if n < 4 or is_prime(n):
        return False, None
    if t.k == 1:
        return True, prime_divisors(n)[0]
    g = t.part_gcd
    if g > 1:
        return True, prime_divisors(g)[0]
    # the set-partition test is cheap only for few cycles (Bell numbers)
    if t.k <= 4:
        b = _block_partition_test(t.parts)
        return (b is not None), b
    for b in divisors(n)[1:-1]:
        if _imprimitive_exact(b, t.parts):
            return True, b
    return False, None


def imprimitive_shortcut_small_k(t: CycleType) -> bool:
    """The divisibility tests for 2 <= k <= 4 cycles with coprime lengths."""
    n, k = t.n, t.k
    if not 2 <= k <= 4:
        raise ValueError(f"shortcut needs 2 <= k <= 4 cycles, got k={k}")
    if t.part_gcd != 1:
        raise ValueError(f"shortcut needs coprime cycle lengths, got {t}")
    if k == 2:
        return False
    for x in set(permutations(t.parts)):
        if k == 3:
            x1, x2, x3 = x
            e = (x1 + x2) // gcd(x3, n)
            if x1 % e == 0 and x2 % e == 0:
                return True
            continue
        x1, x2, x3, x4 = x
        e = (x1 + x2 + x3) // gcd(x4, n)
        if x1 % e == 0 and x2 % e == 0 and x3 % e == 0:
            return True
        e = (x1 + x2) // gcd(gcd(x3, x4), n)
        if x1 % e == 0 and x2 % e == 0:
            return True
        b = gcd(x1 + x2, n)
        e1, e2 = (x1 + x2) // b, (x3 + x4) // b
        if x1 % e1 == 0 and x2 % e1 == 0 and x3 % e2 == 0 and x4 % e2 == 0:
            return True
    return False


def covers_affine(p: int, t: CycleType) -> bool:
    """Whether AGL_1(p) contains an element of type t.

    Its elements are translations (one p-cycle), the identity, and
    x -> ax + b with a != 1 of order d: one fixed point and (p-1)/d d-cycles.
    """
    if t.n != p or not is_prime(p):
        raise ValueError(f"AGL_1(p) needs n = p prime, got p={p}, n={t.n}")
    parts = t.parts
    if parts == (p,) or parts[0] == 1:
        return True
    d = parts[0]
    return (p - 1) % d == 0 and parts == (d,) * ((p - 1) // d) + (1,)


def class_covers(c: SubgroupClass, t: CycleType) -> bool:
    _check_degree(c.n, t)
    if t.parts[0] == 1:
        return True  # identity
    if c.kind == INTRANSITIVE:
        return covers_intransitive(c.param, t)
    if c.kind == IMPRIMITIVE:
        return _imprimitive_exact(c.param, t.parts)
    if c.kind == AFFINE:
        return covers_affine(c.param, t)
    if c.kind == ALTERNATING:
        return t.sign == 1
    return t.k == 1 or any(e.exceptional_type == t for e in c.entries)
