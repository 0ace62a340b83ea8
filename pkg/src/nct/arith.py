"""Elementary number theory for desk-scale integers (n <= 10**6)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from math import gcd


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_base(n: int) -> int | None:
    """Return p if n = p**e with e >= 1, else None."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    return next(iter(f))


def is_prime_power(n: int) -> bool:
    return prime_power_base(n) is not None


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def tau(n: int) -> int:
    t = 1
    for e in factorize(n).values():
        t *= e + 1
    return t


def totient(n: int) -> int:
    phi = n
    for p in factorize(n):
        phi -= phi // p
    return phi


def omega(n: int) -> int:
    return len(factorize(n)) if n > 1 else 0


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n)) if n > 1 else []


def multi_gcd(*xs: int) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def repunit(q: int, d: int) -> int:
    """(q**d - 1) / (q - 1), the number of points of a projective space."""
    return (q**d - 1) // (q - 1)


@cache
def repunit_forms(n: int) -> frozenset[tuple[int, int]]:
    """All (q, d) with q a prime power, d >= 2 and n = (q^d - 1)/(q - 1).

    Since (q^d - 1)/(q - 1) > q^(d-1), only q^(d-1) < n needs scanning.
    """
    forms = set()
    # d = 2 forces q = n - 1; d >= 3 forces q^2 < n.
    if n >= 3 and is_prime_power(n - 1):
        forms.add((n - 1, 2))
    q = 2
    while q * q < n:
        if is_prime_power(q):
            d = 3
            while q ** (d - 1) < n:
                if repunit(q, d) == n:
                    forms.add((q, d))
                d += 1
        q += 1
    return frozenset(forms)


@dataclass(frozen=True)
class ArithProfile:
    n: int
    divisors: tuple[int, ...]
    tau: int
    phi: int
    omega: int
    smallest_primes: tuple[int, ...]
    repunit_forms: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    is_prime: bool = False
    is_prime_power: bool = False

    @property
    def p1(self) -> int | None:
        return self.smallest_primes[0] if self.smallest_primes else None

    @property
    def p2(self) -> int | None:
        return self.smallest_primes[1] if len(self.smallest_primes) > 1 else None


def arith_profile(n: int) -> ArithProfile:
    if n < 1:
        raise ValueError(f"arith_profile needs n >= 1, got {n}")
    divs = tuple(divisors(n))
    primes = prime_divisors(n)
    return ArithProfile(
        n=n,
        divisors=divs,
        tau=len(divs),
        phi=totient(n),
        omega=len(primes),
        smallest_primes=tuple(primes[:2]),
        repunit_forms=repunit_forms(n),
        is_prime=is_prime(n),
        is_prime_power=len(primes) == 1,
    )
