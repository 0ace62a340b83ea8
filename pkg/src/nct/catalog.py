"""Hard-coded catalog of cycle types with 2-4 cycles lying in primitive groups.

For n > 36, an element with 2 <= k <= 4 cycles and coprime cycle lengths
that lies in a primitive group other than A_n or S_n has one of the ten
listed shapes. Below that degree the list is incomplete, so entries are
returned with ``valid=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import gcd, isqrt

from .arith import is_prime, is_prime_power, repunit, repunit_forms
from .cycletypes import CycleType

VALIDITY_THRESHOLD = 36


@dataclass(frozen=True)
class CatalogEntry:
    line: int
    exceptional_type: CycleType
    parameters: tuple[tuple[str, int], ...] = ()
    # True only for line-7 instances with gcd(d1, d2) > 1, which the
    # catalog states without a coprimality condition.
    unrestricted_gcd: bool = field(default=False, compare=False)

    @property
    def params(self) -> dict[str, int]:
        return dict(self.parameters)

    def to_row(self) -> dict:
        return {
            "line": self.line,
            "type": str(self.exceptional_type),
            "parameters": self.params,
            "unrestricted_gcd": self.unrestricted_gcd,
        }


def _entry(line, parts, **params) -> CatalogEntry | None:
    if any(x < 1 for x in parts):
        return None
    t = CycleType(tuple(parts))
    if not 2 <= t.k <= 4 or t.part_gcd != 1:
        return None
    return CatalogEntry(line, t, tuple(sorted(params.items())))


def _lines(n: int):
    if is_prime_power(n):
        q = n
        yield _entry(1, (1, q - 1), q=q)
        if q % 2:
            yield _entry(3, (1, (q - 1) // 2, (q - 1) // 2), q=q)
        if q % 3 == 1:
            third = (q - 1) // 3
            yield _entry(6, (1, third, third, third), q=q)
    if n >= 3 and is_prime_power(n - 1):
        yield _entry(2, (1, n - 1), q=n - 1)
    r = isqrt(n)
    if r * r == n and r % 2 and is_prime(r):
        yield _entry(4, (1, r - 1, r * (r - 1)), p=r)
    for q, d in sorted(repunit_forms(n)):
        for d1 in range(1, d):
            d2 = d - d1
            if gcd(d1, d2) != 1:
                continue
            a, b = repunit(q, d1), repunit(q, d2)
            c = (q**d1 - 1) * (q**d2 - 1) // (q - 1)
            yield _entry(5, (a, b, c), q=q, d=d, d1=d1, d2=d2)
            if q % 2:
                yield _entry(10, (a, b, c // 2, c // 2), q=q, d=d, d1=d1, d2=d2)
    if n >= 2 and n & (n - 1) == 0:
        d = n.bit_length() - 1
        for d1 in range(1, d):
            d2 = d - d1
            a, b = 2**d1 - 1, 2**d2 - 1
            e = _entry(7, (1, a, b, a * b), d=d, d1=d1, d2=d2)
            if e is not None and gcd(d1, d2) > 1:
                e = CatalogEntry(e.line, e.exceptional_type, e.parameters, True)
            yield e
        half = 2 ** (d - 1) - 1
        yield _entry(8, (1, 1, half, half), d=d)
    m = isqrt(n)
    if m * m == n:
        for k1 in range(1, m):
            for k2 in range(1, m):
                quad = (k1, k2, m - k1, m - k2)
                if any(gcd(quad[i], quad[j]) != 1 for i in range(4) for j in range(i + 1, 4)):
                    continue
                parts = (k1 * k2, k1 * (m - k2), (m - k1) * k2, (m - k1) * (m - k2))
                yield _entry(9, parts, m=m, k1=k1, k2=k2)


@cache
def _catalog(n: int) -> tuple[CatalogEntry, ...]:
    seen: dict[CycleType, CatalogEntry] = {}
    for e in _lines(n):
        if e is None:
            continue
        prev = seen.get(e.exceptional_type)
        # one entry per type; prefer the lower line and the gcd-restricted reading
        if prev is None or (prev.unrestricted_gcd and not e.unrestricted_gcd) or (
            prev.unrestricted_gcd == e.unrestricted_gcd and e.line < prev.line
        ):
            seen[e.exceptional_type] = e
    return tuple(sorted(seen.values(), key=lambda e: (e.line, e.exceptional_type.parts)))


def primitive_catalog(n: int) -> tuple[tuple[CatalogEntry, ...], bool]:
    """Every catalog instance at degree n, and whether the catalog is proven complete there."""
    if n < 2:
        raise ValueError(f"primitive_catalog needs n >= 2, got {n}")
    return _catalog(n), n > VALIDITY_THRESHOLD


def catalog_types(n: int) -> frozenset[CycleType]:
    return frozenset(e.exceptional_type for e in _catalog(n))


def repunit_points(n: int) -> frozenset[int]:
    """Integers (q^e - 1)/(q - 1), 1 <= e < d, over the repunit forms of n."""
    pts = set()
    for q, d in repunit_forms(n):
        for e in range(1, d):
            pts.add(repunit(q, e))
    return frozenset(pts)


__all__ = [
    "VALIDITY_THRESHOLD",
    "CatalogEntry",
    "catalog_types",
    "primitive_catalog",
    "repunit_points",
]
