"""Matrix realizations of the classical algebras and their parabolic gradings.

``sl_N``/``gl_N`` for type A; ``so_N`` and ``sp_2n`` are taken with respect
to the anti-diagonal forms, so a matrix ``a`` in ``so_N`` satisfies
``a[N-1-j][N-1-i] == -a[i][j]`` and in ``sp_2n`` the same relation holds
with sign ``-1`` inside a half and ``+1`` across the halves.  The diagonal
matrices form the Cartan subalgebra and the upper triangular ones the
Borel.

All indices here are 0-based; the JSON forms use 1-based positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import roots as R
from .linalg import ExactMatrix
from .roots import LieType, Root

Sparse = dict[tuple[int, int], Fraction]


class ModelError(ValueError):
    pass


def j_matrix(k: int) -> ExactMatrix:
    """k x k matrix with ones on the anti-diagonal."""
    if k < 0:
        raise ValueError("negative size")
    return ExactMatrix(k, k, [1 if i + j == k - 1 else 0 for i in range(k) for j in range(k)])


def matrix_size(family: str, rank: int) -> int:
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]


@dataclass(frozen=True)
class MatrixAlgebra:
    lie_type: LieType
    gl: bool = False

    def __post_init__(self):
        if not self.lie_type.is_classical:
            raise ModelError(f"{self.lie_type} has no classical matrix model")
        if self.gl and self.lie_type.family != "A":
            raise ModelError("the gl flag only applies to type A")

    @classmethod
    def of(cls, family: str, rank: int, gl: bool = False) -> "MatrixAlgebra":
        return cls(LieType(family, rank), gl)

    @property
    def family(self) -> str:
        return self.lie_type.family

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def N(self) -> int:
        return matrix_size(self.family, self.rank)

    @property
    def name(self) -> str:
        n = self.N
        return {"A": "gl" if self.gl else "sl", "B": "so", "C": "sp", "D": "so"}[self.family] + str(n)

    def mirror(self, i: int, j: int) -> tuple[int, int]:
        n = self.N
        return (n - 1 - j, n - 1 - i)

    def mirror_sign(self, i: int, j: int) -> int:
        """Sign s with a[mirror(i, j)] == s * a[i, j]."""
        if self.family in "BD":
            return -1
        if self.family == "C":
            h = self.N // 2
            return -1 if (i < h) == (j < h) else 1
        raise ModelError("type A has no mirror relation")

    @property
    def dim(self) -> int:
        n = self.N
        if self.family == "A":
            return n * n if self.gl else n * n - 1
        if self.family == "C":
            return n * (n + 1) // 2
        return n * (n - 1) // 2

    def is_canonical(self, i: int, j: int) -> bool:
        """Whether (i, j) is the representative of its root vector (upper-left half)."""
        if self.family == "A":
            return True
        s = i + j
        if self.family == "C":
            return s <= self.N - 1
        return s < self.N - 1

    def is_member(self, m: ExactMatrix) -> bool:
        n = self.N
        if m.shape != (n, n):
            return False
        if self.family == "A":
            return self.gl or sum(m[i, i] for i in range(n)) == 0
        for i in range(n):
            for j in range(n):
                a, b = self.mirror(i, j)
                if m[a, b] != self.mirror_sign(i, j) * m[i, j]:
                    return False
        return True

    def root_vector(self, i: int, j: int) -> Sparse:
        """The basis vector containing entry (i, j), as a sparse map."""
        n = self.N
        if not (0 <= i < n and 0 <= j < n):
            raise ModelError(f"entry {(i, j)} outside {n}x{n}")
        if self.family == "A":
            return {(i, j): Fraction(1)}
        a, b = self.mirror(i, j)
        s = self.mirror_sign(i, j)
        if (a, b) == (i, j):
            if s == -1:
                raise ModelError(f"entry {(i, j)} is forced to vanish in {self.name}")
            return {(i, j): Fraction(1)}
        return {(i, j): Fraction(1), (a, b): Fraction(s)}

    def complete_root_vector(self, i: int, j: int) -> ExactMatrix:
        if i >= j:
            raise ModelError("entry must lie strictly above the diagonal")
        n = self.N
        return ExactMatrix.from_sparse(n, n, self.root_vector(i, j))

    @cached_property
    def basis(self) -> tuple[Sparse, ...]:
        n = self.N
        out: list[Sparse] = []
        if self.family == "A":
            for i in range(n):
                for j in range(n):
                    if i != j:
                        out.append({(i, j): Fraction(1)})
            if self.gl:
                out.extend({(i, i): Fraction(1)} for i in range(n))
            else:
                out.extend({(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)} for i in range(n - 1))
            return tuple(out)
        for i in range(n):
            for j in range(n):
                if self.is_canonical(i, j):
                    try:
                        out.append(self.root_vector(i, j))
                    except ModelError:
                        pass
        return tuple(out)

    # --- weights ----------------------------------------------------------

    def eps_weight(self, k: int) -> tuple[int, int]:
        """(sign, eps-index) of the diagonal weight at position k; sign 0 for the zero weight."""
        n, rank = self.N, self.rank
        if self.family == "A":
            return (1, k)
        if k < rank:
            return (1, k)
        if k >= n - rank:
            return (-1, n - 1 - k)
        return (0, 0)

    def entry_eps(self, i: int, j: int) -> tuple[int, ...]:
        """Weight of entry (i, j) in eps-coordinates."""
        size = self.N if self.family == "A" else self.rank
        v = [0] * size
        si, ki = self.eps_weight(i)
        sj, kj = self.eps_weight(j)
        if si:
            v[ki] += si
        if sj:
            v[kj] -= sj
        return tuple(v)

    @cached_property
    def _eps_to_simple(self) -> list[list[Fraction]]:
        """Matrix M with simple-root coordinates = M @ eps-coordinates."""
        f, n = self.family, self.rank
        if f == "A":
            # eps_i - eps_j -> alpha_i + ... + alpha_{j-1}; handled directly
            return []
        simple = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            simple.append(v)
        v = [0] * n
        if f == "B":
            v[n - 1] = 1
        elif f == "C":
            v[n - 1] = 2
        else:
            v[n - 2] = 1
            v[n - 1] = 1
        simple.append(v)
        # columns of S are simple roots; invert S
        s = [[Fraction(simple[c][r]) for c in range(n)] for r in range(n)]
        return _invert(s)

    def eps_to_root(self, eps: Sequence[int]) -> Root:
        if self.family == "A":
            # coefficient of alpha_k is the partial sum eps_0 + ... + eps_k
            out, acc = [], 0
            for k in range(self.N - 1):
                acc += eps[k]
                out.append(acc)
            if acc + eps[self.N - 1] != 0:
                raise ModelError("weight is not in the root lattice")
            return tuple(out)
        m = self._eps_to_simple
        out = []
        for row in m:
            c = sum((row[k] * e for k, e in enumerate(eps)), Fraction(0))
            if c.denominator != 1:
                raise ModelError(f"weight {eps} is not in the root lattice")
            out.append(int(c))
        return tuple(out)

    def entry_to_root(self, i: int, j: int) -> Root:
        return self.eps_to_root(self.entry_eps(i, j))

    @cached_property
    def root_system(self) -> R.RootSystem:
        return R.build(self.lie_type)

    def simple_root_entries(self) -> list[tuple[int, int]]:
        """One matrix entry for each simple root root vector, in Bourbaki order."""
        f, n = self.family, self.rank
        out = [(i, i + 1) for i in range(n - 1)]
        if f == "A":
            out.append((n - 1, n))
        elif f in "BC":
            out.append((n - 1, n))
        else:
            out.append((n - 2, n))
        return out


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c])
        a[c], a[p] = a[p], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class Rectangle:
    index: int          # 1-based rectangle number R_{i,i+1}
    row0: int
    col0: int
    rows: int
    cols: int

    def contains(self, i: int, j: int) -> bool:
        return self.row0 <= i < self.row0 + self.rows and self.col0 <= j < self.col0 + self.cols

    def to_global(self, p: int, q: int) -> tuple[int, int]:
        if not (0 <= p < self.rows and 0 <= q < self.cols):
            raise ModelError(f"local position {(p, q)} outside rectangle {self.index} ({self.rows}x{self.cols})")
        return (self.row0 + p, self.col0 + q)


@dataclass(frozen=True)
class GradedModel:
    """A classical matrix algebra with the grading of a standard parabolic."""

    algebra: MatrixAlgebra
    blocks: tuple[int, ...]

    def __post_init__(self):
        if sum(self.blocks) != self.algebra.N or any(b <= 0 for b in self.blocks):
            raise ModelError(f"blocks {self.blocks} do not partition N={self.algebra.N}")
        if self.algebra.family != "A" and tuple(reversed(self.blocks)) != self.blocks:
            raise ModelError(f"blocks {self.blocks} are not symmetric")

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for b in self.blocks:
            out.append(acc)
            acc += b
        return tuple(out)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        return tuple(k for k, b in enumerate(self.blocks) for _ in range(b))

    def grade(self, i: int, j: int) -> int:
        return self.block_of[j] - self.block_of[i]

    def rectangle(self, i: int) -> Rectangle:
        """R_{i,i+1} for 1-based i."""
        if not 1 <= i < len(self.blocks):
            raise ModelError(f"no rectangle {i} for {len(self.blocks)} blocks")
        return Rectangle(i, self.offsets[i - 1], self.offsets[i], self.blocks[i - 1], self.blocks[i])

    def rectangles(self) -> list[Rectangle]:
        return [self.rectangle(i) for i in range(1, len(self.blocks))]

    def graded_part(self, k: int) -> list[tuple[int, int]]:
        """Canonical entries of the root vectors of degree k (k >= 1)."""
        alg = self.algebra
        n = alg.N
        out = []
        for i in range(n):
            for j in range(n):
                if i != j and self.grade(i, j) == k and alg.is_canonical(i, j):
                    if alg.family != "A":
                        a, b = alg.mirror(i, j)
                        if (a, b) == (i, j) and alg.mirror_sign(i, j) == -1:
                            continue
                    out.append((i, j))
        return out

    def basis_grades(self) -> list[int]:
        out = []
        for v in self.algebra.basis:
            (i, j) = next(iter(v))
            out.append(self.grade(i, j))
        return out

    def graded_dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.basis_grades():
            out[g] = out.get(g, 0) + 1
        return dict(sorted(out.items()))

    @cached_property
    def levi_dim(self) -> int:
        return self.graded_dims().get(0, 0)

    @cached_property
    def nilradical_dim(self) -> int:
        return sum(d for g, d in self.graded_dims().items() if g > 0)

    def parabolic_basis(self) -> list[Mapping[tuple[int, int], Fraction]]:
        return [v for v, g in zip(self.algebra.basis, self.basis_grades()) if g >= 0]

    def entry_to_root(self, i: int, j: int) -> Root:
        return self.algebra.entry_to_root(i, j)

    def crossing(self) -> tuple[int, ...]:
        return tuple(int(self.grade(i, j) > 0) for i, j in self.algebra.simple_root_entries())

    def in_degree(self, m: ExactMatrix | Mapping[tuple[int, int], object], k: int = 1) -> bool:
        data = m.nonzero() if isinstance(m, ExactMatrix) else m
        return all(self.grade(i, j) == k for (i, j), v in data.items() if v)

    def to_json(self) -> dict:
        return {"type": self.algebra.family, "rank": self.algebra.rank, "blocks": list(self.blocks)}


def sparse_to_matrix(n: int, data: Mapping[tuple[int, int], object]) -> ExactMatrix:
    return ExactMatrix.from_sparse(n, n, data)


def add_sparse(acc: Sparse, v: Mapping[tuple[int, int], object], c=1) -> Sparse:
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = Fraction(y)
        else:
            acc.pop(k, None)
    return acc


def element_from_entries(alg: MatrixAlgebra, entries: Iterable[tuple[int, int]],
                         coeffs: Iterable[object] | None = None) -> ExactMatrix:
    """Sum of the root vectors through the given canonical entries."""
    acc: Sparse = {}
    entries = list(entries)
    coeffs = [1] * len(entries) if coeffs is None else list(coeffs)
    for (i, j), c in zip(entries, coeffs):
        add_sparse(acc, alg.root_vector(i, j), c)
    return sparse_to_matrix(alg.N, acc)
