"""Exact dense matrices over the rationals and rank computations.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Two elimination routes are provided: a fraction-free
Bareiss elimination on dense integer rows, and a sparse fraction-free
elimination with content reduction that the verification code uses for
the large, very sparse adjoint and commutator maps.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Scalar = Fraction
SparseRow = Mapping[int, "int | Fraction"]


class ShapeError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class ExactMatrix:
    """Immutable rows x cols matrix with rational entries, row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        entries = tuple(_frac(x) for x in entries)
        if not entries and rows * cols:
            entries = (Fraction(0),) * (rows * cols)
        if len(entries) != rows * cols:
            raise ShapeError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def from_sparse(cls, rows: int, cols: int, data: Mapping[tuple[int, int], object]) -> "ExactMatrix":
        """Build from a {(i, j): value} map with 0-based indices."""
        ent = [Fraction(0)] * (rows * cols)
        for (i, j), v in data.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ShapeError(f"index {(i, j)} outside {rows}x{cols}")
            ent[i * cols + j] = _frac(v)
        return cls(rows, cols, ent)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def nonzero(self) -> dict[tuple[int, int], Fraction]:
        c = self.cols
        return {divmod(k, c): v for k, v in enumerate(self.entries) if v}

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.rows, self.cols, self.entries))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return add(self, other)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return add(self, scale(other, -1))

    def __neg__(self) -> "ExactMatrix":
        return scale(self, -1)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return matmul(self, other)

    def to_json(self) -> list[list[str]]:
        return [[_fmt(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "ExactMatrix":
        return cls.from_rows([[Fraction(x) for x in r] for r in data])


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def add(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.shape != b.shape:
        raise ShapeError(f"cannot add {a.shape} and {b.shape}")
    return ExactMatrix(a.rows, a.cols, [x + y for x, y in zip(a.entries, b.entries)])


def scale(a: ExactMatrix, c) -> ExactMatrix:
    c = _frac(c)
    return ExactMatrix(a.rows, a.cols, [c * x for x in a.entries])


def transpose(a: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(a.cols, a.rows, [a.entries[i * a.cols + j] for j in range(a.cols) for i in range(a.rows)])


def matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    # row-sparse product; the matrices used here are mostly zeros
    bnz: list[list[tuple[int, Fraction]]] = [
        [(j, v) for j, v in enumerate(b.row(k)) if v] for k in range(b.rows)
    ]
    out = [Fraction(0)] * (a.rows * b.cols)
    for i in range(a.rows):
        base = i * b.cols
        for k, aik in enumerate(a.row(i)):
            if aik:
                for j, v in bnz[k]:
                    out[base + j] += aik * v
    return ExactMatrix(a.rows, b.cols, out)


def power(a: ExactMatrix, k: int) -> ExactMatrix:
    if a.rows != a.cols:
        raise ShapeError("power of a non-square matrix")
    out = ExactMatrix.identity(a.rows)
    for _ in range(k):
        out = matmul(out, a)
    return out


def _integer_row(row: Iterable[tuple[int, object]]) -> dict[int, int]:
    items = [(c, _frac(v)) for c, v in row if v]
    if not items:
        return {}
    den = lcm(*(v.denominator for _, v in items))
    return {c: int(v * den) for c, v in items}


def rank_bareiss(m: ExactMatrix) -> int:
    """Row rank by dense fraction-free (Bareiss) elimination."""
    rows = []
    for i in range(m.rows):
        r = _integer_row(enumerate(m.row(i)))
        rows.append([r.get(j, 0) for j in range(m.cols)])
    nrows, ncols = len(rows), m.cols
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        prow = rows[rank]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            f = ri[col]
            rows[i] = [(p * ri[j] - f * prow[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
    return rank


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    """Rank of a matrix given as sparse rows {col: value}.

    Fraction-free elimination with gcd content reduction; the pivot is
    picked from the shortest remaining row and, within it, the column
    touched by the fewest rows, which keeps fill-in small on the
    adjoint matrices this package produces.
    """
    active: dict[int, dict[int, int]] = {}
    colmap: dict[int, set[int]] = defaultdict(set)
    for rid, r in enumerate(rows):
        ir = _integer_row(r.items())
        if ir:
            active[rid] = _primitive(ir)
            for c in ir:
                colmap[c].add(rid)
    rank = 0
    while active:
        rid = min(active, key=lambda k: len(active[k]))
        prow = active.pop(rid)
        for c in prow:
            colmap[c].discard(rid)
        pc = min(prow, key=lambda c: (len(colmap[c]), abs(prow[c])))
        pv = prow[pc]
        rank += 1
        for other in list(colmap[pc]):
            orow = active[other]
            f = orow[pc]
            g = gcd(pv, f)
            a, b = pv // g, f // g
            new = {c: a * v for c, v in orow.items()} if a != 1 else dict(orow)
            for c, v in prow.items():
                w = new.get(c, 0) - b * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            for c in orow:
                if c not in new:
                    colmap[c].discard(other)
            for c in new:
                if c not in orow:
                    colmap[c].add(other)
            if new:
                active[other] = _primitive(new)
            else:
                del active[other]
    return rank


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def rank(m: ExactMatrix, method: str = "sparse") -> int:
    if method == "bareiss":
        return rank_bareiss(m)
    if method != "sparse":
        raise ValueError(f"unknown rank method {method!r}")
    return sparse_rank({j: v for j, v in enumerate(m.row(i)) if v} for i in range(m.rows))


def kernel_dim(m: ExactMatrix, method: str = "sparse") -> int:
    return m.cols - rank(m, method)


def sparse_kernel_dim(columns: Sequence[SparseRow], ncols: int | None = None) -> int:
    """Nullity of the linear map whose images of the basis vectors are ``columns``.

    Rank is transpose-invariant, so the column images are eliminated as rows.
    """
    n = len(columns) if ncols is None else ncols
    return n - sparse_rank(columns)
