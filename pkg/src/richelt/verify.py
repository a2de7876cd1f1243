"""Jordan data, centralizer dimensions and the Richardson test.

Everything is exact.  Linear maps on the matrix algebras are assembled as
sparse column images and handed to :func:`richelt.linalg.sparse_rank`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .classical import GradedModel, MatrixAlgebra, element_from_entries
from .linalg import ExactMatrix, matmul, rank, sparse_rank


class NotNilpotentError(ValueError):
    pass


class CriterionMismatch(RuntimeError):
    """The centralizer and bracket-image criteria disagreed (cannot happen for x in g_1)."""


@dataclass(frozen=True)
class JordanData:
    partition: tuple[int, ...]
    dual: tuple[int, ...]
    rank_sequence: tuple[int, ...]

    def to_json(self) -> dict:
        return {"jordan": list(self.partition), "dual": list(self.dual), "ranks": list(self.rank_sequence)}


def conjugate(partition: Sequence[int]) -> tuple[int, ...]:
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p >= k) for k in range(1, max(partition) + 1))


def jordan_data(x: ExactMatrix) -> JordanData:
    if x.rows != x.cols:
        raise ValueError("square matrix required")
    n = x.rows
    ranks = []
    pw = x
    for _ in range(n + 1):
        r = rank(pw)
        ranks.append(r)
        if r == 0:
            break
        pw = matmul(pw, x)
    else:
        raise NotNilpotentError("matrix is not nilpotent")
    if ranks[-1] != 0:
        raise NotNilpotentError("matrix is not nilpotent")
    full = [n] + ranks
    # dual[k-1] = #{blocks of size >= k} = rk X^{k-1} - rk X^k
    dual = tuple(full[k - 1] - full[k] for k in range(1, len(full)) if full[k - 1] - full[k])
    return JordanData(conjugate(dual), dual, tuple(ranks))


def centralizer_dim_formula(family: str, partition: Sequence[int], N: int | None = None) -> int:
    """Centralizer dimension from the Jordan type (gl convention for type A).

    sp: (sum m_i^2 + #odd parts) / 2, so: (sum m_i^2 - #odd parts) / 2, where
    m is the dual partition.
    """
    partition = tuple(sorted(partition, reverse=True))
    if N is not None and sum(partition) != N:
        raise ValueError(f"partition {partition} does not sum to {N}")
    m = conjugate(partition)
    sq = sum(x * x for x in m)
    odd = sum(1 for p in partition if p % 2)
    if family == "A":
        return sq
    if family == "C":
        return (sq + odd) // 2
    if family in "BD":
        return (sq - odd) // 2
    raise ValueError(f"no matrix formula for type {family}")


def centralizer_dim_formula_printed(family: str, partition: Sequence[int]) -> Fraction:
    """The formula without the overall factor 1/2, kept only to demonstrate it fails."""
    m = conjugate(sorted(partition, reverse=True))
    sq = sum(x * x for x in m)
    odd = sum(1 for p in partition if p % 2)
    if family == "A":
        return Fraction(sq)
    return sq + Fraction(odd, 2) * (1 if family == "C" else -1)


def _commutator_columns(basis: Iterable[Mapping[tuple[int, int], object]],
                        x: Mapping[tuple[int, int], object], n: int) -> list[dict[int, object]]:
    """Images of basis vectors Y under Y -> [Y, x], flattened to index i*n + j."""
    by_row: dict[int, list] = {}
    by_col: dict[int, list] = {}
    for (i, j), v in x.items():
        if v:
            by_row.setdefault(i, []).append((j, v))
            by_col.setdefault(j, []).append((i, v))
    cols = []
    for y in basis:
        out: dict[int, object] = {}
        for (i, k), a in y.items():
            for j, v in by_row.get(k, ()):
                key = i * n + j
                out[key] = out.get(key, 0) + a * v
        for (k, j), a in y.items():
            for i, v in by_col.get(k, ()):
                key = i * n + j
                out[key] = out.get(key, 0) - v * a
        cols.append({k: v for k, v in out.items() if v})
    return cols


def _as_sparse(x: ExactMatrix | Mapping) -> Mapping[tuple[int, int], object]:
    return x.nonzero() if isinstance(x, ExactMatrix) else x


def _algebra(model: GradedModel | MatrixAlgebra) -> MatrixAlgebra:
    return model.algebra if isinstance(model, GradedModel) else model


def centralizer_dim_direct(model: GradedModel | MatrixAlgebra, x: ExactMatrix) -> int:
    alg = _algebra(model)
    if not alg.is_member(x):
        raise ValueError(f"matrix is not in {alg.name}")
    basis = alg.basis
    cols = _commutator_columns(basis, _as_sparse(x), alg.N)
    return len(basis) - sparse_rank(cols)


def bracket_image_dim(model: GradedModel, x: ExactMatrix) -> int:
    """dim [p, x]."""
    cols = _commutator_columns(model.parabolic_basis(), _as_sparse(x), model.algebra.N)
    return sparse_rank(cols)


@dataclass(frozen=True)
class RichardsonReport:
    centralizer_direct: int
    levi_dim: int
    bracket_image: int
    nilradical_dim: int

    @property
    def richardson(self) -> bool:
        return self.centralizer_direct == self.levi_dim


def richardson_report(model: GradedModel, x: ExactMatrix) -> RichardsonReport:
    if not model.in_degree(x, 1):
        raise ValueError("element does not lie in g_1")
    rep = RichardsonReport(centralizer_dim_direct(model, x), model.levi_dim,
                           bracket_image_dim(model, x), model.nilradical_dim)
    if rep.bracket_image > rep.nilradical_dim:
        raise CriterionMismatch(f"dim [p,x] = {rep.bracket_image} exceeds dim n = {rep.nilradical_dim}")
    if (rep.centralizer_direct == rep.levi_dim) != (rep.bracket_image == rep.nilradical_dim):
        raise CriterionMismatch(
            f"centralizer {rep.centralizer_direct} vs levi {rep.levi_dim}, "
            f"[p,x] {rep.bracket_image} vs n {rep.nilradical_dim}")
    return rep


def is_richardson(model: GradedModel, x: ExactMatrix) -> bool:
    return richardson_report(model, x).richardson


GENERIC_RANGE = (1, 10 ** 6)
DEFAULT_SEEDS = (11, 23, 47)


def generic_element(model: GradedModel, seed: int) -> ExactMatrix:
    """Element of g_1 with pseudo-random coefficients on every root vector."""
    rng = random.Random(seed)
    entries = model.graded_part(1)
    coeffs = [rng.randint(*GENERIC_RANGE) for _ in entries]
    return element_from_entries(model.algebra, entries, coeffs)


def generic_centralizer_dim(model: GradedModel, seeds: Sequence[int] = DEFAULT_SEEDS) -> int:
    return min(centralizer_dim_direct(model, generic_element(model, s)) for s in seeds)


def oracle_is_nice(model: GradedModel, seeds: Sequence[int] = DEFAULT_SEEDS) -> bool:
    """Niceness decided by the dimension criterion on generic elements of g_1."""
    return generic_centralizer_dim(model, seeds) == model.levi_dim
