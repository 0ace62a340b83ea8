"""Explicit normal coverings of S_n and A_n, and exhaustive cycle-type verification."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import gcd

from .arith import arith_profile, is_prime, prime_divisors, totient
from .coverage import (
    ALTERNATING,
    INTRANSITIVE,
    SubgroupClass,
    class_covers,
)
from .cycletypes import CycleType, count_cycle_types

P21_S_ODD = "P21-S-odd"
P21_A_ODD = "P21-A-odd"
P21_EVEN = "P21-even"
P22 = "P22"
P23 = "P23"
P24 = "P24"
CUSTOM = "custom"
PROVENANCES = (P21_S_ODD, P21_A_ODD, P21_EVEN, P22, P23, P24, CUSTOM)


class FamilyNotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class CoveringFamily:
    n: int
    group: str
    members: tuple[SubgroupClass, ...]
    provenance: str = CUSTOM

    def __post_init__(self):
        if self.group not in ("S", "A"):
            raise ValueError(f"group must be 'S' or 'A', got {self.group!r}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        for c in self.members:
            if c.n != self.n:
                raise ValueError(f"member {c} has degree {c.n}, family degree is {self.n}")
            if c.kind == ALTERNATING and self.group != "S":
                raise ValueError("A_n may only be used when covering S_n")

    @property
    def size(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "group": self.group,
            "provenance": self.provenance,
            "members": [c.to_row() for c in self.members],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> CoveringFamily:
        n, group = int(doc["n"]), doc["group"]
        members = []
        for m in doc["members"]:
            kind, param = m["kind"], m.get("param")
            if kind == "primitive":
                members.append(SubgroupClass.wildcard(n, group))
            elif kind == ALTERNATING:
                members.append(SubgroupClass.alternating(n))
            else:
                members.append(SubgroupClass(kind, n, param, group=group))
        return cls(n, group, tuple(members), doc.get("provenance", CUSTOM))


@dataclass
class CoverageReport:
    covered: bool
    family_size: int
    uncovered_types: list[CycleType]
    per_type_witness: dict[CycleType, SubgroupClass] = field(default_factory=dict)
    required_count: int = 0
    # partition prefixes whose completions were certified by an intransitive member
    pruned_prefixes: int = 0
    # False when a time budget stopped the enumeration early
    complete: bool = True

    @property
    def verified(self) -> bool:
        return self.covered and self.complete

    def to_row(self) -> dict:
        return {
            "covered": self.covered,
            "complete": self.complete,
            "family_size": self.family_size,
            "required_count": self.required_count,
            "uncovered": [str(t) for t in self.uncovered_types],
        }


def _require(cond: bool, why: str):
    if not cond:
        raise FamilyNotApplicable(why)


def _intr(ks, n, group):
    seen = []
    for k in ks:
        c = SubgroupClass.intransitive(k, n, group)
        if c not in seen:
            seen.append(c)
    return seen


def build_family(provenance: str, n: int, group: str) -> CoveringFamily:
    """The covering family of the named construction at degree n."""
    if group not in ("S", "A"):
        raise ValueError(f"group must be 'S' or 'A', got {group!r}")
    _require(n >= 4, f"n >= 4 required, got n={n}")
    if provenance == P21_S_ODD:
        _require(n % 2 == 1 and n >= 5, f"{provenance} needs odd n >= 5, got n={n}")
        _require(group == "S", f"{provenance} covers S_n only")
        p = prime_divisors(n)[0]
        if p < n:
            members = _intr((k for k in range(1, (n - 1) // 2 + 1) if k % p), n, group)
            members.append(SubgroupClass.imprimitive(p, n, group))
        else:
            members = _intr(range(2, (n - 1) // 2 + 1), n, group)
            members.append(SubgroupClass.affine(n, group))
    elif provenance == P21_A_ODD:
        _require(n % 2 == 1 and n >= 5, f"{provenance} needs odd n >= 5, got n={n}")
        _require(group == "A", f"{provenance} covers A_n only")
        members = _intr(range(1, n // 3 + 1), n, group)
        if is_prime(n):
            members.append(SubgroupClass.affine(n, group))
        else:
            members.append(SubgroupClass.imprimitive(prime_divisors(n)[0], n, group))
    elif provenance == P21_EVEN:
        _require(n % 2 == 0, f"{provenance} needs even n, got n={n}")
        members = _intr(range(1, (n + 1) // 2, 2), n, group)
        members.append(SubgroupClass.imprimitive(2, n, group))
    elif provenance == P22:
        _require(is_prime(n) and n % 3 == 1 and n >= 7, f"{provenance} needs a prime p = 1 mod 3, p >= 7, got {n}")
        _require(group == "A", f"{provenance} covers A_p only")
        m = (n - 1) // 3
        ks = [k for k in range(1, n) if 1 <= (m + 1) * k % n <= m - 1]
        members = _intr(ks, n, group)
        members.append(SubgroupClass.affine(n, group))
    elif provenance == P23:
        prof = arith_profile(n)
        _require(not prof.is_prime_power, f"{provenance} needs n not a prime power, got n={n}")
        _require(
            (group == "S" and n % 2 == 0) or (group == "A" and n % 2 == 1),
            f"{provenance} needs G = S_n with n even or G = A_n with n odd",
        )
        p1, p2 = prof.p1, prof.p2
        members = _intr((k for k in range(1, (n + 1) // 2) if k < n / 2 and gcd(k, p1 * p2) == 1), n, group)
        members += [SubgroupClass.imprimitive(p1, n, group), SubgroupClass.imprimitive(p2, n, group)]
    elif provenance == P24:
        _require(n % 3 == 0, f"{provenance} needs 3 | n, got n={n}")
        _require(
            (group == "S" and n % 2 == 1) or (group == "A" and n % 2 == 0),
            f"{provenance} needs G = S_n with n odd or G = A_n with n even",
        )
        c1 = [k for k in range(1, n // 2 + 1) if k % 3 == 0]
        c2 = [k for k in range(1, n // 2 + 1) if gcd(n, k) == 1]
        members = _intr(c1 + c2, n, group)
        members += [SubgroupClass.imprimitive(p, n, group) for p in prime_divisors(n) if p < n]
        if group == "S":
            members.append(SubgroupClass.alternating(n))
    else:
        raise FamilyNotApplicable(f"unknown provenance {provenance!r}")
    return CoveringFamily(n, group, tuple(members), provenance)


def family_size_formula(provenance: str, n: int) -> tuple[float, bool]:
    """(bound, exact): the construction's cardinality bound and whether the
    construction meets it with equality."""
    if provenance == P21_S_ODD:
        p = prime_divisors(n)[0]
        if p == n:
            return n // 2, True
        # composite n: the construction has at most (n - 1)/2 members
        return n // 2, False
    if provenance == P21_A_ODD:
        return n // 3 + 1, True
    if provenance == P21_EVEN:
        return n // 4 + 1, True
    if provenance == P22:
        return (n - 1) // 3, True
    if provenance == P23:
        prof = arith_profile(n)
        return n / 2 * (1 - 1 / prof.p1) * (1 - 1 / prof.p2) + 2, False
    if provenance == P24:
        return n / 6 + totient(n) / 2 + arith_profile(n).omega + 1, False
    raise ValueError(f"no size formula for {provenance!r}")


def applicable(provenance: str, n: int, group: str) -> bool:
    try:
        build_family(provenance, n, group)
    except FamilyNotApplicable:
        return False
    return True


def applicable_provenances(n: int, group: str) -> list[str]:
    return [p for p in PROVENANCES[:-1] if applicable(p, n, group)]


class _OutOfTime(Exception):
    pass


def verify_family(f: CoveringFamily, exhaustive: bool = False, time_budget: float | None = None) -> CoverageReport:
    """Check every required cycle type against the family's members.

    Required types are all partitions of n (group S) or those of sign +1
    (group A). Partitions are generated part by part with a running
    subset-sum bitset; once a prefix already has an invariant-set size equal
    to some intransitive member's k (or n - k), every completion is covered
    and the subtree is skipped unless ``exhaustive`` is set, in which case
    every type gets an explicit witness.

    With ``time_budget`` (seconds) the enumeration may stop early; the report
    then has complete=False and ``covered`` only speaks for what was seen.
    """
    n, group = f.n, f.group
    intr_member = {}
    for c in f.members:
        if c.kind == INTRANSITIVE:
            intr_member.setdefault(c.param, c)
            intr_member.setdefault(n - c.param, c)
    intr_mask = 0
    for k in intr_member:
        intr_mask |= 1 << k
    others = [c for c in f.members if c.kind != INTRANSITIVE]
    sign_filter = 1 if group == "A" else None

    uncovered: list[CycleType] = []
    witness: dict[CycleType, SubgroupClass] = {}
    pruned = 0
    nodes = 0
    deadline = None if time_budget is None else time.monotonic() + time_budget
    parts: list[int] = []

    def leaf():
        t = CycleType(tuple(parts))
        if sign_filter is not None and t.sign != sign_filter:
            return
        if exhaustive:
            hit = _sums_hit(t)
            if hit is not None:
                witness[t] = hit
                return
        for c in others:
            if class_covers(c, t):
                witness[t] = c
                return
        uncovered.append(t)

    def _sums_hit(t):
        mask = 1
        for x in t.parts:
            mask |= mask << x
        hit = mask & intr_mask
        if not hit:
            return None
        return intr_member[(hit & -hit).bit_length() - 1]

    def rec(remaining: int, largest: int, mask: int):
        nonlocal pruned, nodes
        nodes += 1
        if deadline is not None and nodes & 4095 == 0 and time.monotonic() > deadline:
            raise _OutOfTime
        if remaining == 0:
            leaf()
            return
        for x in range(min(remaining, largest), 0, -1):
            new_mask = mask | (mask << x)
            parts.append(x)
            if not exhaustive and new_mask & intr_mask:
                pruned += 1
            else:
                rec(remaining - x, x, new_mask)
            parts.pop()

    complete = True
    try:
        rec(n, n, 1)
    except _OutOfTime:
        complete = False
    return CoverageReport(
        covered=not uncovered,
        family_size=f.size,
        uncovered_types=uncovered,
        per_type_witness=witness,
        required_count=count_cycle_types(n, sign_filter),
        pruned_prefixes=pruned,
        complete=complete,
    )
