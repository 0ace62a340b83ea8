from math import gcd

import pytest

from nct.arith import is_prime
from nct.catalog import catalog_types
from nct.coverage import covered_by_some_imprimitive, covers_affine
from nct.cycletypes import CycleType
from nct.exceptional import (
    classify_degenerate_cubes,
    classify_restricted_triples,
    degenerate_cube_ceiling,
    restricted_triple_ceiling,
)


def _expected_tags(t, n):
    imp = covered_by_some_imprimitive(t)[0]
    cat = t in catalog_types(n)
    aff = is_prime(n) and covers_affine(n, t)
    return imp, cat, aff


@pytest.mark.parametrize("n", range(9, 61))
def test_triples_exact_crosscheck(n):
    rep = classify_restricted_triples(n)
    got = {(it.x, it.h): it for it in rep.items}
    for h in (1, 2, 4):
        x = 3
        while x + h < n / 2 - 2:
            if gcd(gcd(x, h), n) == 1:
                t = CycleType((x, x + h, n - 2 * x - h))
                imp, cat, aff = _expected_tags(t, n)
                it = got.get((x, h))
                assert (it is not None) == (imp or cat or aff)
                if it is not None:
                    assert it.imprimitive == imp
                    assert any(s.startswith("catalog") for s in it.tags) == cat
                    assert ("affine" in it.tags) == aff
            x += 1
    assert len(got) == len(rep.items)


@pytest.mark.parametrize("n", range(9, 61))
def test_cubes_exact_crosscheck(n):
    rep = classify_degenerate_cubes(n)
    got = {(it.x, it.h): it for it in rep.items}
    for it in rep.items:
        t = it.cycle_type
        assert t == CycleType((it.x, it.x, it.x + it.h, n - 3 * it.x - it.h))
        imp, cat, aff = _expected_tags(t, n)
        assert it.imprimitive == imp
        assert any(s.startswith("catalog") for s in it.tags) == cat
        assert it.boundary == (it.x == 1)
    for h in (1, -1):
        for x in range(1, n):
            if n - 3 * x - h < 1 or x + h < 1 or gcd(gcd(n, x + 1), 2) != 1:
                continue
            t = CycleType((x, x, x + h, n - 3 * x - h))
            imp, cat, aff = _expected_tags(t, n)
            assert ((x, h) in got) == (imp or cat or aff)


def test_ceilings_hold():
    for n in range(9, 201):
        assert classify_restricted_triples(n).count <= restricted_triple_ceiling(n)
        assert classify_degenerate_cubes(n).count <= degenerate_cube_ceiling(n)


def test_frozen_reports():
    rep = classify_degenerate_cubes(36)
    assert [(it.x, it.h, str(it.cycle_type), it.tags) for it in rep.items] == [(12, -1, "(12,12,11,1)", ("b", "c1"))]
    s = rep.summary()
    assert s["count"] == 1 and s["within_ceiling"]
    # tau(12) = 6: 36 + 72 + 90 and 96 + 96
    assert restricted_triple_ceiling(12) == 198
    assert degenerate_cube_ceiling(12) == 192


def test_domain():
    with pytest.raises(ValueError):
        classify_restricted_triples(6)
    with pytest.raises(ValueError):
        classify_degenerate_cubes(8)
