from __future__ import annotations

import pytest

from richelt import roots as R
from richelt.parabolic import ParabolicDesc, enumerate_nice
from richelt.recipe import (RecipeError, build_xr, build_xr_hat, build_xr_hat_unchecked,
                            build_xr_identity_variant, build_xr_plain, hat_index, is_star_form,
                            j_at, rectangle_support, subtracting_pairs, two_corners)
from richelt.verify import jordan_data


def P(family, *blocks):
    return ParabolicDesc.from_blocks(family, blocks)


def test_local_patterns():
    assert j_at(3, 0, 1) == [(0, 3), (1, 2), (2, 1)]
    assert sorted(two_corners(1, 1, 2, 2)) == [(0, 1), (1, 0)]


def test_gl4_121():
    c = build_xr(P("A", 1, 2, 1))
    assert sorted(c.matrix.nonzero()) == [(0, 1), (1, 3)]
    assert c.support == [(1, 0, 0), (0, 1, 1)]
    assert jordan_data(c.matrix).partition == (3, 1)
    assert c.verified


def test_sp4_121():
    c = build_xr(P("C", 1, 2, 1))
    assert c.support == [(1, 0)]
    assert c.report.centralizer_direct == 4 == c.report.levi_dim


def test_so4_22():
    c = build_xr(P("D", 2, 2))
    m = c.matrix
    assert [[m[i, j] for j in (2, 3)] for i in (0, 1)] == [[1, 0], [0, -1]]
    assert c.support == [(0, 1)]          # eps1 + eps2 is alpha_2 in D2
    assert c.verified


def test_borel_uses_simple_roots():
    for fam, blocks in (("A", (1,) * 5), ("C", (1,) * 6), ("B", (1,) * 7), ("D", (1,) * 8)):
        p = P(fam, *blocks)
        c = build_xr(p)
        assert sorted(c.support) == sorted(R.build(p.lie_type).simple_roots)


def test_not_nice_refused():
    with pytest.raises(RecipeError):
        build_xr(P("A", 2, 1, 3))


def test_hat_dichotomy():
    good = build_xr_hat(P("B", 1, 2, 1, 2, 1))
    assert good.variant == "hat" and good.verified
    bad_p = P("B", 1, 4, 3, 4, 1)
    bad = build_xr_hat_unchecked(bad_p)
    assert not bad.report.richardson
    with pytest.raises(RecipeError, match="a_"):
        build_xr_hat(bad_p)
    with pytest.raises(RecipeError):
        build_xr_hat(P("B", 2, 3, 2))          # unimodal
    assert hat_index(P("B", 1, 2, 1, 2, 1)) is not None
    assert build_xr(P("B", 1, 2, 1, 2, 1)).variant == "hat"


def test_plain_variant_is_not_enough_when_hat_applies():
    c = build_xr_plain(P("B", 1, 2, 1, 2, 1), verify=False)
    assert c.variant == "standard"


def test_identity_variant():
    c = build_xr_identity_variant(P("A", 1, 2, 1))
    assert sorted(c.matrix.nonzero()) == [(0, 1), (1, 3)]
    c = build_xr_identity_variant(P("A", 2, 2))
    assert jordan_data(c.matrix).partition == (2, 2)
    borel = P("A", 1, 1, 1, 1)
    assert build_xr_identity_variant(borel).matrix == build_xr(borel).matrix
    with pytest.raises(RecipeError):
        build_xr_identity_variant(P("C", 1, 2, 1))


def test_identity_variant_same_orbit_as_recipe():
    for p in enumerate_nice("A", 5):
        assert jordan_data(build_xr_identity_variant(p).matrix).partition == jordan_data(build_xr(p).matrix).partition


def test_star_form_examples():
    assert is_star_form(P("B", 1, 2, 3, 2, 1))      # unimodal, a_1 odd, a_2 even, 1 < r
    assert is_star_form(P("D", 3, 2, 3))            # dip with a_l odd
    assert not is_star_form(P("B", 1, 1, 1, 1, 1))  # Borel
    assert not is_star_form(P("D", 2, 2))           # even number of blocks
    with pytest.raises(RecipeError):
        is_star_form(P("C", 1, 2, 1))
    with pytest.raises(RecipeError):
        is_star_form(P("A", 1, 2, 1))


@pytest.mark.parametrize("family", ["B", "D"])
def test_star_form_matches_support(family):
    for p in enumerate_nice(family, 6):
        if len(p.blocks) < 2:
            continue
        c = build_xr(p)
        pairs = subtracting_pairs(R.build(p.lie_type), c.support)
        assert is_star_form(p) == bool(pairs), p


def test_rectangle_support_c_case_b():
    p = P("C", 2, 4, 2)
    c = build_xr(p)
    s = rectangle_support(c, 1)
    rs = R.build(p.lie_type)
    assert R.factor_types(rs, s) == ["A2"]


def test_candidate_json():
    j = build_xr(P("A", 1, 2, 1)).to_json()
    assert j["chosen"] == [[1, 2], [2, 4]]
    assert j["verified"] is True and j["algebra"] == "gl4"
