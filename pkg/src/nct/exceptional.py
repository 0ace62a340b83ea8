"""Restricted triples and degenerate cubes that a transitive subgroup can cover.

These are the few 3- and 4-cycle types the lower-bound arguments must set
aside before the additive-combinatorial bounds apply. Each classifier
lists them with the divisibility condition responsible and compares the
count with the divisor-count ceiling that bounds it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import is_prime, tau
from .catalog import catalog_types, primitive_catalog
from .coverage import _set_partitions, covers_affine
from .cycletypes import CycleType

RESTRICTED_SHIFTS = (1, 2, 4)
CUBE_SHIFTS = (1, -1)


@dataclass(frozen=True)
class ExceptionalItem:
    x: int
    h: int
    cycle_type: CycleType
    tags: tuple[str, ...]
    boundary: bool = False

    @property
    def imprimitive(self) -> bool:
        return any(not t.startswith(("catalog", "affine")) for t in self.tags)

    def to_row(self) -> dict:
        return {
            "x": self.x,
            "h": self.h,
            "type": str(self.cycle_type),
            "tags": list(self.tags),
            "boundary": self.boundary,
        }


@dataclass
class ExceptionalReport:
    n: int
    kind: str
    items: list[ExceptionalItem] = field(default_factory=list)
    ceiling: int = 0
    group: str | None = None

    @property
    def count(self) -> int:
        """Items caught by an imprimitive condition (the quantity the ceiling bounds)."""
        return sum(1 for it in self.items if it.imprimitive)

    @property
    def catalog_count(self) -> int:
        return sum(1 for it in self.items if not it.imprimitive)

    def to_rows(self) -> list[dict]:
        rows = []
        for it in self.items:
            row = {"n": self.n, "kind": self.kind, "group": self.group}
            row.update(it.to_row())
            rows.append(row)
        return rows

    def summary(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "group": self.group,
            "count": self.count,
            "catalog_count": self.catalog_count,
            "ceiling": self.ceiling,
            "within_ceiling": self.count <= self.ceiling,
        }


def _catalog_tags(t: CycleType) -> list[str]:
    n = t.n
    tags = []
    if t in catalog_types(n):
        for e in primitive_catalog(n)[0]:
            if e.exceptional_type == t:
                tags.append(f"catalog:{e.line}")
    if is_prime(n) and covers_affine(n, t):
        tags.append("affine")
    return tags


def _divides_all(e: int, *xs: int) -> bool:
    return all(x % e == 0 for x in xs)


def restricted_triple_ceiling(n: int) -> int:
    tn = tau(n)
    return sum(2 * tn * tau(h) + tn * tau(n - h) + tn * tau(n + h) for h in RESTRICTED_SHIFTS)


def classify_restricted_triples(n: int) -> ExceptionalReport:
    """3-partitions (x, x+h, n-2x-h), h in {1,2,4}, covered by a transitive class.

    Only 2 < x and x + h < n/2 - 2 with gcd(x, h, n) = 1 are scanned.
    """
    if n < 7:
        raise ValueError(f"classify_restricted_triples needs n >= 7, got {n}")
    rep = ExceptionalReport(n, "restricted-triples", ceiling=restricted_triple_ceiling(n))
    for h in RESTRICTED_SHIFTS:
        x = 3
        while x + h < n / 2 - 2:
            if gcd(gcd(x, h), n) == 1:
                z = n - 2 * x - h
                tags = []
                e = (2 * x + h) // gcd(2 * x + h, n)
                if _divides_all(e, x, x + h):
                    tags.append("1")
                e = (n - x - h) // gcd(n - x - h, n)
                if _divides_all(e, x, z):
                    tags.append("2")
                e = (n - x) // gcd(n - x, n)
                if _divides_all(e, x + h, z):
                    tags.append("3")
                t = CycleType((x, x + h, z))
                tags += _catalog_tags(t)
                if tags:
                    rep.items.append(ExceptionalItem(x, h, t, tuple(tags)))
            x += 1
    return rep


def degenerate_cube_ceiling(n: int) -> int:
    tn = tau(n)
    return sum(2 * tn + tn * tau(n - h) + 3 * tn * tau(n + 2 * h) for h in CUBE_SHIFTS)


# positions 0, 1 hold the two copies of x, 2 holds x + h, 3 the remainder
def _cube_shape_tag(labels: list[int]) -> str:
    cells: dict[int, list[int]] = {}
    for pos, c in enumerate(labels):
        cells.setdefault(c, []).append(pos)
    sizes = sorted((len(v) for v in cells.values()), reverse=True)
    if sizes == [3, 1]:
        single = next(v[0] for v in cells.values() if len(v) == 1)
        return {3: "a1", 2: "a2"}.get(single, "a3")
    if sizes == [2, 1, 1]:
        return "b"
    pair = next(v for v in cells.values() if 0 in v)
    return "c1" if pair == [0, 1] else "c2"


def classify_degenerate_cubes(n: int, group: str = "S") -> ExceptionalReport:
    """4-partitions (x, x, x+h, n-3x-h), h = +-1, covered by a transitive class.

    Scans x >= 1 with every part positive and gcd(n, x+1, 2) = 1. Items with
    x = 1 are marked as boundary cases.
    """
    if n < 9:
        raise ValueError(f"classify_degenerate_cubes needs n >= 9, got {n}")
    rep = ExceptionalReport(n, "degenerate-cubes", ceiling=degenerate_cube_ceiling(n), group=group)
    for h in CUBE_SHIFTS:
        x = 1
        while n - 3 * x - h >= 1:
            if x + h >= 1 and gcd(gcd(n, x + 1), 2) == 1:
                parts = (x, x, x + h, n - 3 * x - h)
                tags = []
                for labels in _set_partitions(4):
                    ncell = max(labels) + 1
                    if ncell in (1, 4):
                        continue
                    sums = [0] * ncell
                    for v, c in zip(parts, labels):
                        sums[c] += v
                    b = 0
                    for s in sums:
                        b = gcd(b, s)
                    if all(v % (sums[c] // b) == 0 for v, c in zip(parts, labels)):
                        tag = _cube_shape_tag(labels)
                        if tag not in tags:
                            tags.append(tag)
                t = CycleType(parts)
                tags = sorted(tags) + _catalog_tags(t)
                if tags:
                    rep.items.append(ExceptionalItem(x, h, t, tuple(tags), boundary=x == 1))
            x += 1
    return rep
