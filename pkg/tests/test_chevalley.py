from __future__ import annotations

from fractions import Fraction

import pytest

from richelt import roots as R
from richelt.chevalley import build_constants, regular_nilpotent


@pytest.mark.parametrize("name", ["A1", "A3", "B2", "B3", "C3", "D4", "G2"])
def test_jacobi_exhaustive_small(name):
    sc = build_constants(name)
    assert sc.check_jacobi() == []
    assert sc.check_antisymmetry()
    assert sc.check_chain_lengths()


@pytest.mark.parametrize("name", ["A2", "B3", "C4", "D5", "E6", "F4", "G2"])
def test_regular_nilpotent_centralizer_is_rank(name):
    sc = build_constants(name)
    assert sc.ad_kernel_dim(regular_nilpotent(sc)) == sc.rank


def test_sl2_killing_form():
    sc = build_constants("A1")
    e, f, h = sc.e((1,)), sc.e((-1,)), sc.h(0)
    assert sc.killing_form(h, h) == 8
    assert sc.killing_form(e, f) == 4
    assert sc.bracket(e, f) == h


def test_structure_constant_bounds():
    assert max(abs(v) for v in build_constants("G2").n_table.values()) == 3
    assert max(abs(v) for v in build_constants("F4").n_table.values()) == 2


def test_bracket_of_root_vectors_lands_in_sum():
    sc = build_constants("B3")
    a, b = (1, 0, 0), (0, 1, 0)
    x = sc.bracket(sc.e(a), sc.e(b))
    assert list(x.root_part) == [(1, 1, 0)]
    assert abs(x.root_part[(1, 1, 0)]) == 1


def test_vec_round_trip():
    sc = build_constants("C2")
    x = sc.element({(1, 0): 3, (0, -1): Fraction(1, 2)}, cartan=(1, -2))
    assert sc.from_vec(sc.to_vec(x)) == x


def test_e_rejects_non_root():
    with pytest.raises(ValueError):
        build_constants("A2").e((2, 0))


def test_jacobi_check_detects_a_sign_flip():
    import copy
    sc = copy.copy(build_constants("B2"))
    sc.n_table = dict(sc.n_table)
    a, b = next(iter(sc.n_table))
    sc.n_table[(a, b)] *= -1
    sc.n_table[(b, a)] *= -1
    sc.__dict__.pop("_table", None)
    assert sc.check_antisymmetry()
    assert sc.check_jacobi() != []
