"""Acceptance criteria. Each test prints one PASS/FAIL line; run with
``pytest tests/test_acceptance.py -v`` (the lines show even under capture).
"""

import random
import time
from itertools import permutations
from math import floor

import pytest

from nct.addcomb import (
    COPRIME_CUBE_FREE,
    COPRIME_SUM_FREE,
    DEGENERATE_CUBE_EVEN_FREE,
    DEGENERATE_CUBE_FREE,
    RESTRICTED_TRIPLE_FREE,
    ExtremalProblem,
    is_free,
    known_construction,
    max_extremal,
    popular_sums,
    sumset,
)
from nct.arith import divisors, is_prime, prime_divisors, repunit_forms
from nct.bounds import gamma_bracket, limits_row
from nct.catalog import catalog_types
from nct.coverage import covered_by_some_imprimitive, covers_affine, covers_imprimitive_exact, imprimitive_shortcut_small_k
from nct.cycletypes import CycleType, enumerate_cycle_types, invariant_set_sizes
from nct.exceptional import (
    classify_degenerate_cubes,
    classify_restricted_triples,
    degenerate_cube_ceiling,
    restricted_triple_ceiling,
)
from nct.families import (
    P21_A_ODD,
    P21_EVEN,
    P21_S_ODD,
    P22,
    P23,
    P24,
    applicable_provenances,
    build_family,
    family_size_formula,
    verify_family,
)


@pytest.fixture
def report(capsys):
    def emit(num, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
        assert ok, detail

    return emit


def _expected_size(prov, n):
    bound, exact = family_size_formula(prov, n)
    if prov == P21_S_ODD and not exact:
        # composite odd n: the construction's own count, itself below floor(n/2)
        p = prime_divisors(n)[0]
        return sum(1 for k in range(1, (n - 1) // 2 + 1) if k % p) + 1, bound
    return (bound if exact else None), bound


def test_criterion_1_family_sweep(report):
    t0 = time.perf_counter()
    cases, bad = 0, []
    for n in range(5, 61):
        for g in ("S", "A"):
            for prov in applicable_provenances(n, g):
                f = build_family(prov, n, g)
                rep = verify_family(f)
                exact, bound = _expected_size(prov, n)
                size_ok = f.size == exact if exact is not None else f.size <= bound
                if prov == P21_S_ODD:
                    size_ok = size_ok and f.size <= bound
                if not (rep.covered and rep.complete and size_ok):
                    bad.append((prov, n, g, f.size, bound))
                cases += 1
    for p in range(7, 200):
        if is_prime(p) and p % 3 == 1:
            f = build_family(P22, p, "A")
            rep = verify_family(f)
            if not (rep.covered and rep.complete and f.size == (p - 1) // 3):
                bad.append((P22, p, "A", f.size, (p - 1) // 3))
            cases += 1
    dt = time.perf_counter() - t0
    report(1, not bad and dt <= 300, f"{cases} (provenance, n, group) cases verified, sizes match; failures={bad}; {dt:.1f}s")


@pytest.mark.parametrize("n", [38, 46, 58, 62, 64])
def test_criterion_2_exact_gamma_S(report, n):
    t0 = time.perf_counter()
    b = gamma_bracket(n, "S")
    dt = time.perf_counter() - t0
    want = n // 4 + 1
    ok = b.lower == b.upper == want and b.lower_sound and b.upper_verified and dt <= 60
    report(2, ok, f"gamma(S_{n}): lower={b.lower} upper={b.upper} expected {want} ({b.upper_witness.provenance}); {dt:.1f}s")


A_PRIMES = [p for p in range(37, 98) if is_prime(p) and not repunit_forms(p)]


@pytest.mark.parametrize("p", A_PRIMES)
def test_criterion_3_exact_gamma_A(report, p):
    t0 = time.perf_counter()
    b = gamma_bracket(p, "A")
    dt = time.perf_counter() - t0
    want = (p + 1) // 3
    ok = b.lower == b.upper == want and b.lower_sound and b.upper_verified and dt <= 60
    if p % 3 == 1:
        ok = ok and b.upper_witness.provenance == P22 and b.upper == (p - 1) // 3
    report(3, ok, f"gamma(A_{p}): lower={b.lower} upper={b.upper} expected {want} via {b.upper_witness.provenance}; {dt:.1f}s")


def test_criterion_4_sum_free(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 31):
        r = max_extremal(ExtremalProblem(COPRIME_SUM_FREE, n))
        cap = 2 * n // 3
        if not r.certified or r.maximum > cap or (n % 6 == 0 and r.maximum != cap):
            bad.append(("sum", n, r.maximum, cap))
    for n in range(3, 25):
        r = max_extremal(ExtremalProblem(RESTRICTED_TRIPLE_FREE, n))
        if not r.certified or r.maximum > 2 * n // 3:
            bad.append(("restricted", n, r.maximum))
    dt = time.perf_counter() - t0
    report(4, not bad and dt <= 180, f"coprime-sum-free <= floor(2n/3) on [3,30], equal at 6|n; restricted on [3,24]; failures={bad}; {dt:.1f}s")


def test_criterion_5_cube_free(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(6, 31):
        for v in (COPRIME_CUBE_FREE, DEGENERATE_CUBE_FREE):
            r = max_extremal(ExtremalProblem(v, n))
            if not r.certified or r.maximum > 5 * n / 6 + 6:
                bad.append((v, n, r.maximum))
        if n % 2 == 0:
            r = max_extremal(ExtremalProblem(DEGENERATE_CUBE_EVEN_FREE, n))
            if not r.certified or r.maximum > 8 * n / 9 + 6:
                bad.append(("even", n, r.maximum))
        if n % 3 == 0:
            X = known_construction("no-mult-3", n)
            if not is_free(X, ExtremalProblem(COPRIME_CUBE_FREE, n))[0]:
                bad.append(("no-mult-3 not free", n))
    r9 = max_extremal(ExtremalProblem(COPRIME_CUBE_FREE, 9))
    if not (r9.maximum == 6 == len(known_construction("no-mult-3", 9)) and r9.certified):
        bad.append(("n=9", r9.maximum))
    dt = time.perf_counter() - t0
    report(5, not bad and dt <= 300, f"cube maxima <= 5n/6+6, even-x <= 8n/9+6, no-mult-3 free, n=9 -> {r9.maximum}; failures={bad}; {dt:.1f}s")


def test_criterion_6_shortcut_oracle(report):
    checked, bad = 0, []
    for n in range(4, 25):
        if is_prime(n):
            continue
        for t in enumerate_cycle_types(n, max_parts=4):
            if t.k < 2 or t.part_gcd != 1:
                continue
            exact = any(covers_imprimitive_exact(b, t) for b in divisors(n)[1:-1])
            checked += 1
            if imprimitive_shortcut_small_k(t) != exact:
                bad.append(str(t))
    report(6, not bad, f"{checked} gcd-1 types with k in 2..4 over composite n <= 24, discrepancies={len(bad)} {bad[:5]}")


def _item_true(it, n):
    t = it.cycle_type
    for tag in it.tags:
        if tag.startswith("catalog"):
            ok = t in catalog_types(n)
        elif tag == "affine":
            ok = is_prime(n) and covers_affine(n, t)
        else:
            ok = any(covers_imprimitive_exact(b, t) for b in divisors(n)[1:-1])
        if not ok:
            return False
    return True


def test_criterion_7_exceptional_counters(report):
    over, false_pos, items = [], [], 0
    for n in range(9, 201):
        for rep, cap in (
            (classify_restricted_triples(n), restricted_triple_ceiling(n)),
            (classify_degenerate_cubes(n), degenerate_cube_ceiling(n)),
        ):
            if rep.count > cap:
                over.append((rep.kind, n, rep.count, cap))
            if n <= 60:
                for it in rep.items:
                    items += 1
                    if not _item_true(it, n):
                        false_pos.append((n, str(it.cycle_type), it.tags))
    report(7, not over and not false_pos, f"ceilings hold on [9,200] (violations={over}); {items} items re-verified for n<=60, false positives={false_pos}")


def test_criterion_8_limits_table(report):
    t0 = time.perf_counter()
    bad = []
    for p in range(3, 101):
        if is_prime(p):
            n = 2 * p
            r = limits_row(n, "S", verify_budget=0.5)
            if not 0.25 <= r["upper"] / n <= 0.25 + 2 / n:
                bad.append(("S", n, r["upper"]))
    for p in range(5, 200):
        if is_prime(p) and not repunit_forms(p):
            r = limits_row(p, "A", verify_budget=0.5)
            lo, hi = 1 / 3 - 2 / p, 1 / 3 + 2 / p
            if not (lo <= r["lower"] / p <= hi and lo <= r["upper"] / p <= hi):
                bad.append(("A", p, r["lower"], r["upper"]))
    for n in range(6, 121, 6):
        f = build_family(P23, n, "S")
        r = limits_row(n, "S", verify_budget=0.5, time_budget=5)
        if not (f.size / n <= 1 / 6 + 2.5 / n and r["upper"] <= f.size):
            bad.append(("P23", n, f.size))
    dt = time.perf_counter() - t0
    report(8, not bad and dt <= 120, f"S_2p ratios in [1/4, 1/4+2/n], A_p in 1/3 +- 2/p, 6|n P23 <= 1/6+2.5/n; failures={bad}; {dt:.1f}s")


def _cycle_type(perm):
    seen, parts = [False] * len(perm), []
    for i in range(len(perm)):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j], j, c = True, perm[j], c + 1
            parts.append(c)
    return CycleType(tuple(parts))


def test_criterion_9_property_suites(report):
    rng = random.Random(2024)
    fails = []
    for p in (5, 7, 11, 13):
        for _ in range(200):
            A = set(rng.sample(range(p), rng.randint(1, p)))
            B = set(rng.sample(range(p), rng.randint(1, p)))
            if len(sumset(A, B, p)) < min(len(A) + len(B) - 1, p):
                fails.append(("CD", p, A, B))
    for _ in range(200):
        n = rng.randint(1, 30)
        A = set(rng.sample(range(n), rng.randint(0, n)))
        B = set(rng.sample(range(n), rng.randint(0, n)))
        prev = popular_sums(A, B, n, 1)
        if prev != sumset(A, B, n):
            fails.append(("K=1", n))
        for K in range(2, len(A) * len(B) + 2):
            cur = popular_sums(A, B, n, K)
            if not cur <= prev:
                fails.append(("antitone", n, K))
            prev = cur
    for _ in range(300):
        parts = [rng.randint(1, 12) for _ in range(rng.randint(1, 8))]
        t = CycleType(tuple(parts))
        s = invariant_set_sizes(t)
        if s != {t.n - x for x in s} or not {0, t.n} <= s:
            fails.append(("symmetry", parts))
    for n in range(1, 8):
        for perm in permutations(range(n)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            if _cycle_type(perm).sign != (-1) ** inv:
                fails.append(("sign", perm))
    report(9, not fails, f"Cauchy-Davenport 4x200 pairs, popular-sums antitone, subset-sum symmetry, sign formula over S_1..S_7; failures={fails[:3]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
