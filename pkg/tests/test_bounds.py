import pytest

from nct.bounds import (
    build_model,
    closed_form_gamma,
    gamma_bracket,
    limits_row,
    min_cover,
    model_candidates,
    model_universe,
)
from nct.coverage import class_covers
from nct.cycletypes import CycleType


def test_universe_shape():
    u = model_universe(10, "S")
    assert CycleType.of(10) in u
    assert all(t.k in (2, 3, 4) and t.part_gcd == 1 for t in u if t.k > 1)
    assert [t for t in u if t.k == 1] == [CycleType.of(10)]
    assert CycleType.of(5, 5) not in u
    ua = model_universe(10, "A")
    assert all(t.sign == 1 for t in ua)
    assert CycleType.of(10) not in ua  # odd permutation
    assert CycleType.of(11) in model_universe(11, "A")


def test_candidates():
    labels = [c.label for c in model_candidates(12, "S")]
    assert labels[:6] == ["S1xS11", "S2xS10", "S3xS9", "S4xS8", "S5xS7", "S6xS6"]
    assert "S2wrS6" in labels and "S6wrS2" in labels and labels[-1] == "A12"
    assert "AGL1(13)" in [c.label for c in model_candidates(13, "A")]
    assert "A13" not in [c.label for c in model_candidates(13, "A")]


def test_model_coverage_matrix():
    m = build_model(14, "S")
    for i, c in enumerate(m.candidates):
        for j, t in enumerate(m.universe):
            assert m.coverage[i, j] == class_covers(c, t)
    assert not m.sound and build_model(37, "A").sound
    with pytest.raises(ValueError):
        build_model(4, "S")
    with pytest.raises(ValueError):
        build_model(10, "Q")


def test_closed_forms():
    assert closed_form_gamma(38, "S") == (10, "S_2p-lower")
    assert closed_form_gamma(64, "S") == (17, "S_2p-lower")
    assert closed_form_gamma(13, "S") == (6, "known-exact-S_p")
    assert closed_form_gamma(37, "A") == (12, "A_p-lower")
    assert closed_form_gamma(73, "A") is None  # 73 = 1 + 8 + 64
    assert closed_form_gamma(36, "S") is None
    with pytest.raises(ValueError):
        closed_form_gamma(10, "X")


def test_min_cover_frozen_values():
    # frozen model minima (certified search)
    assert min_cover(build_model(38, "S")).value == 10
    assert min_cover(build_model(37, "A")).value == 12
    assert min_cover(build_model(73, "A")).value == 24
    assert min_cover(build_model(7, "A")).value == 2


def test_bracket_small():
    b = gamma_bracket(7, "A")
    assert (b.lower, b.upper) == (2, 2)
    assert not b.lower_sound and b.upper_verified
    b = gamma_bracket(36, "S")
    assert b.upper == 8 and b.lower == 7 and not b.lower_sound
    row = b.to_row()
    assert row["upper_family"] == "P23" and row["consistent"]
    with pytest.raises(ValueError):
        gamma_bracket(4, "S")


def test_bracket_witness_covers_universe():
    b = gamma_bracket(41, "A")
    m = build_model(41, "A")
    for t in m.universe:
        assert any(class_covers(c, t) for c in b.lower_witness)


def test_limits_row_fields():
    r = limits_row(46, "S", verify_budget=5)
    assert (r["lower"], r["upper"], r["lower_source"], r["upper_family"]) == (12, 12, "S_2p-lower", "P21-even")
    assert r["lower_ratio"] == round(12 / 46, 6)
    r = limits_row(13, "A")
    assert r["lower_source"] == "set-cover" and not r["lower_sound"]
