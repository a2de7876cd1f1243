from __future__ import annotations

import json

import pytest

from richelt import roots as R
from richelt.roots import LieType
from richelt.tables import (E6_SYMMETRY, TableError, apply_permutation, find_row, load_table, parse_label,
                            search_simple_support, trivial_row, verify_row)


@pytest.fixture(scope="module")
def rows():
    return load_table()


def test_row_counts(rows):
    raw = load_table(expand_symmetry=False)
    count = lambda rs, name: sum(1 for r in rs if str(r.algebra) == name)
    assert [count(raw, n) for n in ("F4", "E6", "E7", "E8")] == [3, 13, 15, 11]
    assert count(rows, "E6") > 13
    assert sum(r.expects_none for r in rows) == 1


def test_specific_rows(rows):
    e6 = find_row(rows, "E6:111010")
    assert len(e6.support) == 5
    assert (0, 0, 0, 0, 1, 1) in e6.support
    assert find_row(rows, "E8:00100010").expects_none
    f4 = find_row(rows, "F4:0001")
    assert set(f4.support) == {(1, 1, 1, 1), (0, 1, 2, 1)}
    with pytest.raises(TableError):
        find_row(rows, "F4:1010")


def test_e6_images_are_diagram_images(rows):
    rs = R.build("E6")
    for r in rows:
        if r.image_of is not None:
            src = find_row(rows, "E6:" + "".join(map(str, r.image_of)))
            assert r.support == tuple(apply_permutation(E6_SYMMETRY, s) for s in src.support)
            assert all(rs.is_root(s) for s in r.support)


def test_labels():
    assert parse_label("123^24", 4) == (1, 1, 2, 1)
    with pytest.raises(TableError):
        parse_label("19", 8)
    with pytest.raises(TableError):
        parse_label("a1", 4)


@pytest.mark.parametrize("key", ["F4:0001", "F4:1100", "E6:100000"])
def test_verify_rows(rows, key):
    rep = verify_row(find_row(rows, key))
    assert rep.passed, rep.failed
    assert rep.kernel_dim == rep.levi_dim


def test_f4_levi(rows):
    assert verify_row(find_row(rows, "F4:0001")).levi_dim == 22


@pytest.mark.parametrize("name", ["G2", "F4", "E6", "B3"])
def test_trivial_rows(name):
    assert verify_row(trivial_row(name, "borel")).passed
    assert verify_row(trivial_row(name, "whole")).passed


def test_expects_none_not_verifiable(rows):
    with pytest.raises(TableError):
        verify_row(find_row(rows, "E8:00100010"))


def _write(tmp_path, doc):
    p = tmp_path / "t.json"
    p.write_text(json.dumps(doc))
    return p


def test_malformed_tables(tmp_path):
    with pytest.raises(TableError, match="row 0"):
        load_table(_write(tmp_path, {"rows": [{"algebra": "F4", "tuple": [0, 0, 1], "support": []}]}))
    with pytest.raises(TableError, match="not a root"):
        load_table(_write(tmp_path, {"rows": [{"algebra": "F4", "tuple": [0, 0, 0, 1], "support": [[1, 0, 0, 1]]}]}))
    with pytest.raises(TableError, match="disagree"):
        load_table(_write(tmp_path, {"rows": [{"algebra": "F4", "tuple": [0, 0, 0, 1], "support": [[1, 1, 1, 1]],
                                                "labels": ["1234^2"]}]}))
    with pytest.raises(TableError):
        load_table(_write(tmp_path, {"nope": 1}))


def test_env_override(tmp_path, monkeypatch):
    p = _write(tmp_path, {"rows": [{"algebra": "G2", "tuple": [1, 1], "support": [[1, 0], [0, 1]]}]})
    monkeypatch.setenv("RICHELT_DATA", str(p))
    rows = load_table()
    assert len(rows) == 1 and verify_row(rows[0]).passed


def test_bad_row_detected():
    from richelt.tables import TableRow
    row = TableRow(LieType("A", 2), (1, 1), ((1, 0),))
    rep = verify_row(row)
    assert "richardson" in rep.failed


def test_f4_search_finds_row():
    rep = search_simple_support("F4", (1, 1, 0, 0))
    assert rep.found is not None and not rep.cutoff_hit


def test_g2_search_trivial_cases():
    assert sorted(search_simple_support("G2", (1, 1)).found) == [(0, 1), (1, 0)]
    assert search_simple_support("G2", (0, 0)).found == []
    rep = search_simple_support("G2", (1, 0))
    assert rep.found is None and not rep.cutoff_hit


def test_search_cutoff():
    rep = search_simple_support("E6", (0, 1, 0, 0, 0, 0), node_cutoff=3)
    assert rep.cutoff_hit or rep.found is not None


def test_g2_nontrivial_tuple_with_simple_support():
    rep = search_simple_support("G2", (0, 1))
    assert sorted(rep.found) == [(0, 1), (2, 1)]
    rs = R.build("G2")
    assert R.is_simple_system(rs, rep.found)
