from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from richelt.parabolic import (ParabolicDesc, ParabolicError, all_parabolics, enumerate_nice, is_nice,
                               is_unimodal, levi_dim, nilradical_dim, tuple_to_blocks)
from richelt.roots import LieType
from richelt.verify import oracle_is_nice


def P(family, *blocks):
    return ParabolicDesc.from_blocks(family, blocks)


@pytest.mark.parametrize("family,blocks,nice,rule", [
    ("A", (2, 3, 2), True, "A/C-unimodal"),
    ("A", (2, 1, 3), False, "not-nice"),
    ("B", (2, 1, 2), True, "B-pattern"),
    ("D", (2, 3, 3, 2), True, "D-case2"),
    ("D", (3, 4, 3), True, "D-case1"),
    ("C", (1, 2, 1), True, "A/C-unimodal"),
    ("C", (1, 1, 2, 1, 1), False, "not-nice"),
    ("D", (3, 3, 2, 3, 3), False, "not-nice"),
])
def test_classification_examples(family, blocks, nice, rule):
    v = is_nice(P(family, *blocks))
    assert (v.nice, v.rule) == (nice, rule)


def test_exceptional_rejected():
    with pytest.raises(ParabolicError):
        is_nice(ParabolicDesc.from_tuple("F4", (0, 0, 0, 1)))


def test_unimodal():
    assert is_unimodal((1, 2, 2, 3, 1))
    assert is_unimodal(())
    assert not is_unimodal((2, 1, 2))


def test_dims():
    assert levi_dim(P("A", 1, 2, 1)) == 6
    assert nilradical_dim(P("A", 1, 2, 1)) == 5
    assert levi_dim(P("C", 1, 2, 1)) == 4
    assert levi_dim(ParabolicDesc.from_tuple("F4", (0, 0, 0, 1))) == 22


def test_enumeration_counts():
    assert len(all_parabolics("A", 2)) == 4
    c2 = {p.blocks for p in enumerate_nice("C", 2, 2)}
    assert {(2, 2), (1, 2, 1), (1, 1, 1, 1)} <= c2
    assert c2 == {(2, 2), (1, 2, 1), (1, 1, 1, 1), (4,)}    # whole algebra included
    assert len(enumerate_nice("A", 2, 2)) == 4
    assert len(all_parabolics("A", 5)) == 2 ** 5


@pytest.mark.parametrize("name", ["A5", "B4", "C4", "D5"])
def test_tuple_round_trip(name):
    t = LieType.parse(name)
    for p in all_parabolics(t.family, t.rank):
        assert tuple_to_blocks(t, p.crossing) == p.blocks


def test_d_fork_without_blocks():
    with pytest.raises(ParabolicError):
        tuple_to_blocks(LieType("D", 4), (0, 0, 1, 0))


def test_bad_descriptors():
    with pytest.raises(ParabolicError):
        P("B", 1, 2, 1, 1)
    with pytest.raises(ParabolicError):
        P("C", 1, 2, 3)
    with pytest.raises(ParabolicError):
        P("A", 0, 2)


@given(st.lists(st.integers(1, 4), min_size=2, max_size=6))
def test_type_a_reversal(blocks):
    assert is_nice(P("A", *blocks)).nice == is_nice(P("A", *reversed(blocks))).nice


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("C", 3), ("D", 4)])
def test_verdict_matches_oracle(family, rank):
    for p in all_parabolics(family, rank):
        assert is_nice(p).nice == oracle_is_nice(p.model()), p
