from __future__ import annotations

import pytest

from richelt.classical import GradedModel, MatrixAlgebra, ModelError, element_from_entries, j_matrix
from richelt.linalg import ExactMatrix, matmul
from richelt.roots import LieType


def E(n, *pairs):
    """Matrix from 1-based (i, j, value) triples."""
    return ExactMatrix.from_sparse(n, n, {(i - 1, j - 1): v for i, j, v in pairs})


def model(family, rank, blocks):
    return GradedModel(MatrixAlgebra(LieType(family, rank), gl=(family == "A")), tuple(blocks))


def test_j_matrix():
    assert j_matrix(1) == ExactMatrix.identity(1)
    assert j_matrix(2) == ExactMatrix.from_rows([[0, 1], [1, 0]])
    for k in (2, 3, 5):
        assert matmul(j_matrix(k), j_matrix(k)) == ExactMatrix.identity(k)


def test_membership():
    so4 = MatrixAlgebra.of("D", 2)
    assert so4.is_member(E(4, (1, 3, 1), (2, 4, -1)))
    assert not so4.is_member(E(4, (1, 3, 1), (2, 4, 1)))
    sl2 = MatrixAlgebra.of("A", 1)
    assert sl2.is_member(E(2, (1, 1, 1), (2, 2, -1)))
    assert not sl2.is_member(E(2, (1, 1, 1)))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_basis_dimension_and_membership(family, rank):
    alg = MatrixAlgebra.of(family, rank)
    assert len(alg.basis) == alg.dim
    for v in alg.basis:
        assert alg.is_member(ExactMatrix.from_sparse(alg.N, alg.N, v)) or family == "A"


def test_complete_root_vectors():
    assert MatrixAlgebra.of("D", 2).complete_root_vector(0, 2) == E(4, (1, 3, 1), (2, 4, -1))
    sp4 = MatrixAlgebra.of("C", 2)
    v = sp4.complete_root_vector(0, 1)
    assert sp4.is_member(v) and v[0, 1] == 1 and v[2, 3] == -1
    assert MatrixAlgebra.of("A", 2).complete_root_vector(0, 1) == E(3, (1, 2, 1))
    with pytest.raises(ModelError):
        MatrixAlgebra.of("B", 1).root_vector(0, 2)   # so3 anti-diagonal vanishes


def test_entry_to_root():
    assert model("A", 3, (1, 2, 1)).entry_to_root(1, 3) == (0, 1, 1)
    assert model("B", 3, (1, 1, 3, 1, 1)).entry_to_root(1, 3) == (0, 1, 1)
    assert model("C", 2, (1, 2, 1)).entry_to_root(0, 1) == (1, 0)


def test_graded_part():
    m = model("A", 3, (1, 2, 1))
    assert sorted(m.graded_part(1)) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert m.graded_part(5) == []
    sp = model("C", 2, (1, 2, 1))
    roots1 = {sp.entry_to_root(i, j) for i, j in sp.graded_part(1)}
    roots2 = {sp.entry_to_root(i, j) for i, j in sp.graded_part(2)}
    assert (1, 1) in roots1            # eps1 + eps2
    assert roots2 == {(2, 1)}          # 2 eps1


@pytest.mark.parametrize("family,rank,blocks", [
    ("A", 3, (1, 2, 1)), ("B", 3, (2, 3, 2)), ("C", 3, (1, 2, 2, 1)), ("D", 4, (3, 2, 3)),
])
def test_graded_dims_sum(family, rank, blocks):
    m = model(family, rank, blocks)
    dims = m.graded_dims()
    assert sum(dims.values()) == m.algebra.dim
    for k in dims:
        assert dims[k] == dims.get(-k, 0)
    assert m.levi_dim + 2 * m.nilradical_dim == m.algebra.dim


def test_levi_dims():
    assert model("A", 3, (1, 2, 1)).levi_dim == 6
    assert model("C", 2, (1, 2, 1)).levi_dim == 4


def test_bad_blocks():
    with pytest.raises(ModelError):
        model("B", 2, (1, 2, 1))
    with pytest.raises(ModelError):
        model("C", 2, (1, 3))


def test_element_from_entries_mirrors():
    alg = MatrixAlgebra.of("B", 2)
    x = element_from_entries(alg, [(0, 1), (1, 2)])
    assert alg.is_member(x)
    assert len(x.nonzero()) == 4
