from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

RESIDUES = "residues"  # Z/n, symmetric under x -> -x
INTEGERS = "integers"  # {1, ..., n-1}, symmetric under x -> n - x
AMBIENTS = (RESIDUES, INTEGERS)


def reflect(x: int, n: int, ambient: str) -> int:
    return (-x) % n if ambient == RESIDUES else n - x


def in_ambient(x: int, n: int, ambient: str) -> bool:
    return 0 <= x < n if ambient == RESIDUES else 1 <= x <= n - 1


def orbits(n: int, ambient: str) -> list[tuple[int, ...]]:
    """Orbits of the reflection, ordered by their least element."""
    start = 0 if ambient == RESIDUES else 1
    out = []
    for x in range(start, n):
        y = reflect(x, n, ambient)
        if y < x:
            continue
        out.append((x,) if x == y else (x, y))
    return out


@dataclass(frozen=True)
class SymmetricSubset:
    n: int
    ambient: str
    elements: frozenset[int]

    def __post_init__(self):
        if self.ambient not in AMBIENTS:
            raise ValueError(f"ambient must be one of {AMBIENTS}, got {self.ambient!r}")
        els = frozenset(int(x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        for x in els:
            if not in_ambient(x, self.n, self.ambient):
                raise ValueError(f"{x} lies outside the {self.ambient} ambient for n={self.n}")
            if reflect(x, self.n, self.ambient) not in els:
                raise ValueError(f"set is not symmetric: {x} present, {reflect(x, self.n, self.ambient)} missing")

    @classmethod
    def of(cls, n: int, ambient: str, elements: Iterable[int]) -> SymmetricSubset:
        return cls(n, ambient, frozenset(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __contains__(self, x) -> bool:
        return x in self.elements

    def sorted(self) -> list[int]:
        return sorted(self.elements)

    def indicator(self) -> list[int]:
        start = 0 if self.ambient == RESIDUES else 1
        return [1 if x in self.elements else 0 for x in range(start, self.n)]
