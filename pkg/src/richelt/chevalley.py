"""Chevalley bases of the simple Lie algebras.

Structure constants are produced by the extraspecial-pair recursion:
``N`` is fixed to ``+(p+1)`` on each extraspecial pair and propagated to
the remaining special pairs through the four-root relation, then to
arbitrary signs through antisymmetry and the three-root relation.
The same code path handles every type, simply laced or not.

Basis order: ``h_1 .. h_n`` (simple coroots), then ``e_a`` for ``a`` in
``rs.roots`` (positives in height order, then their negatives).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from . import roots as R
from .linalg import ExactMatrix, sparse_kernel_dim, sparse_rank
from .roots import Root, RootSystem

Vec = dict[int, Fraction]


class StructureConstantError(RuntimeError):
    pass


@dataclass(frozen=True)
class ChevElement:
    cartan_part: tuple[Fraction, ...]
    root_part: Mapping[Root, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "cartan_part", tuple(Fraction(c) for c in self.cartan_part))
        object.__setattr__(self, "root_part",
                           {tuple(r): Fraction(v) for r, v in self.root_part.items() if v})

    def is_zero(self) -> bool:
        return not any(self.cartan_part) and not self.root_part

    def __eq__(self, other):
        if not isinstance(other, ChevElement):
            return NotImplemented
        return self.cartan_part == other.cartan_part and self.root_part == other.root_part

    def __hash__(self):
        return hash((self.cartan_part, frozenset(self.root_part.items())))

    def support(self) -> list[Root]:
        return sorted(self.root_part, key=lambda r: (sum(r), r))


class StructureConstants:
    """A Chevalley basis of the simple algebra with root system ``rs``."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        self.basis_roots: tuple[Root, ...] = rs.roots
        self.dim = self.rank + len(self.basis_roots)
        self._root_pos = {r: self.rank + k for k, r in enumerate(self.basis_roots)}
        self._norm = {r: rs.norm(r) for r in self.basis_roots}
        self.n_table: dict[tuple[Root, Root], int] = {}
        self._build()

    # --- construction -------------------------------------------------------

    def _build(self) -> None:
        rs = self.rs
        pos = rs.positives
        posn: dict[tuple[Root, Root], int] = {}
        self._posn = posn
        for xi in pos:
            if sum(xi) == 1:
                continue
            pairs = []
            for a in pos:
                b = R.sub(xi, a)
                if rs.is_positive(b) and rs.index(a) < rs.index(b):
                    pairs.append((a, b))
            a0, b0 = pairs[0]
            n0 = rs.string_down(a0, b0) + 1
            posn[(a0, b0)] = n0
            posn[(b0, a0)] = -n0
            nxi = self._norm[xi]
            for g, d in pairs[1:]:
                t = Fraction(0)
                bg = R.sub(b0, g)
                if rs.is_root(bg):
                    t += Fraction(self._n_any(b0, R.neg(g)) * self._n_any(a0, R.neg(d))) / self._norm[bg]
                ag = R.sub(a0, g)
                if rs.is_root(ag):
                    t += Fraction(self._n_any(R.neg(g), a0) * self._n_any(b0, R.neg(d))) / self._norm[ag]
                val = nxi / n0 * t
                if val.denominator != 1:
                    raise StructureConstantError(f"non-integral N for {g}, {d}: {val}")
                posn[(g, d)] = int(val)
                posn[(d, g)] = -int(val)
        for a in self.basis_roots:
            for b in self.basis_roots:
                if rs.is_root(R.add(a, b)):
                    self.n_table[(a, b)] = self._n_any(a, b)
        for (a, b), v in self.n_table.items():
            p = rs.string_down(a, b)
            if abs(v) != p + 1:
                raise StructureConstantError(f"|N({a},{b})| = {abs(v)} but p + 1 = {p + 1}")

    def _n_any(self, r: Root, s: Root) -> int:
        rs = self.rs
        rpos, spos = rs.is_positive(r), rs.is_positive(s)
        if rpos and spos:
            return self._posn[(r, s)]
        if not rpos and not spos:
            return -self._posn[(R.neg(r), R.neg(s))]
        if not rpos:
            return -self._n_any(s, r)
        t = R.add(r, s)
        if rs.is_positive(t):
            val = -self._norm[t] / self._norm[r] * self._posn[(R.neg(s), t)]
        else:
            val = self._norm[t] / self._norm[s] * self._posn[(R.neg(t), r)]
        if val.denominator != 1:
            raise StructureConstantError(f"non-integral N for {r}, {s}")
        return int(val)

    # --- basis bookkeeping --------------------------------------------------

    def basis_labels(self) -> list[str]:
        return [f"h{i + 1}" for i in range(self.rank)] + [f"e[{R.root_label(r)}]" for r in self.basis_roots]

    def root_index(self, r: Sequence[int]) -> int:
        return self._root_pos[tuple(r)]

    def basis_root(self, k: int) -> Root | None:
        return None if k < self.rank else self.basis_roots[k - self.rank]

    def to_vec(self, x: ChevElement) -> Vec:
        v: Vec = {i: c for i, c in enumerate(x.cartan_part) if c}
        for r, c in x.root_part.items():
            v[self._root_pos[r]] = c
        return v

    def from_vec(self, v: Mapping[int, Fraction]) -> ChevElement:
        cart = [Fraction(0)] * self.rank
        rp = {}
        for k, c in v.items():
            if not c:
                continue
            if k < self.rank:
                cart[k] = Fraction(c)
            else:
                rp[self.basis_roots[k - self.rank]] = Fraction(c)
        return ChevElement(tuple(cart), rp)

    def e(self, r: Sequence[int], coeff=1) -> ChevElement:
        r = tuple(r)
        if not self.rs.is_root(r):
            raise ValueError(f"{r} is not a root of {self.rs.lie_type}")
        return ChevElement((0,) * self.rank, {r: Fraction(coeff)})

    def h(self, i: int) -> ChevElement:
        """Simple coroot h_{i+1} (0-based index)."""
        return ChevElement(tuple(int(k == i) for k in range(self.rank)), {})

    def coroot(self, r: Sequence[int]) -> tuple[Fraction, ...]:
        """h_r in the basis of simple coroots."""
        nr = self._norm[tuple(r)]
        return tuple(Fraction(c) * self.rs.norm(self.rs.simple_roots[k]) / nr for k, c in enumerate(r))

    def element(self, support: Mapping[Root, object] | Sequence[Root], cartan=None) -> ChevElement:
        if not isinstance(support, Mapping):
            support = {tuple(r): 1 for r in support}
        cart = tuple(cartan) if cartan is not None else (0,) * self.rank
        return ChevElement(cart, {tuple(r): Fraction(c) for r, c in support.items()})

    # --- brackets -----------------------------------------------------------

    @cached_property
    def _table(self) -> list[list[tuple[tuple[int, int], ...]]]:
        """Basis brackets [b_i, b_j] as tuples of (index, integer coefficient)."""
        n, rs = self.rank, self.rs
        dim = self.dim
        tab: list[list[tuple]] = [[()] * dim for _ in range(dim)]
        for ka, a in enumerate(self.basis_roots):
            ia = n + ka
            for i in range(n):
                w = sum(a[k] * rs.cartan[k][i] for k in range(n))
                if w:
                    tab[i][ia] = ((ia, w),)
                    tab[ia][i] = ((ia, -w),)
            for kb, b in enumerate(self.basis_roots):
                ib = n + kb
                s = R.add(a, b)
                if not any(s):
                    hv = self.coroot(a)
                    tab[ia][ib] = tuple((k, int(c)) for k, c in enumerate(hv) if c)
                else:
                    v = self.n_table.get((a, b))
                    if v:
                        tab[ia][ib] = ((self._root_pos[s], v),)
        return tab

    def bracket_basis(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        return self._table[i][j]

    def bracket_vec(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Vec:
        tab = self._table
        out: Vec = {}
        for i, a in x.items():
            row = tab[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j]:
                    out[k] = out.get(k, 0) + ab * c
        return {k: v for k, v in out.items() if v}

    def bracket(self, x: ChevElement, y: ChevElement) -> ChevElement:
        return self.from_vec(self.bracket_vec(self.to_vec(x), self.to_vec(y)))

    def ad_columns(self, x: ChevElement | Mapping[int, Fraction]) -> list[Vec]:
        xv = self.to_vec(x) if isinstance(x, ChevElement) else x
        return [self.bracket_vec(xv, {j: Fraction(1)}) for j in range(self.dim)]

    def ad_matrix(self, x: ChevElement) -> ExactMatrix:
        cols = self.ad_columns(x)
        return ExactMatrix.from_sparse(self.dim, self.dim, {(i, j): v for j, col in enumerate(cols) for i, v in col.items()})

    def ad_kernel_dim(self, x: ChevElement) -> int:
        return sparse_kernel_dim(self.ad_columns(x), self.dim)

    def ad_rank(self, x: ChevElement) -> int:
        return sparse_rank(self.ad_columns(x))

    def killing_form(self, x: ChevElement, y: ChevElement) -> Fraction:
        """trace(ad x o ad y)."""
        xv, yv = self.to_vec(x), self.to_vec(y)
        total = Fraction(0)
        for j in range(self.dim):
            col = self.bracket_vec(yv, {j: Fraction(1)})
            if not col:
                continue
            img = self.bracket_vec(xv, col)
            total += img.get(j, 0)
        return total

    def character_eval(self, x: ChevElement, y: ChevElement) -> Fraction:
        """Value at ``y`` of the character attached to ``x`` through the Killing form.

        Intended for ``x`` in the degree -1 part and ``y`` in the nilradical;
        neither is checked.
        """
        return self.killing_form(x, y)

    # --- checks -------------------------------------------------------------

    def jacobi_defect(self, i: int, j: int, k: int) -> Vec:
        """[[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] as a sparse vector."""
        tab = self._table
        out: dict[int, int] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, v in tab[a][b]:
                for q, w in tab[m][c]:
                    out[q] = out.get(q, 0) + v * w
        return {q: v for q, v in out.items() if v}

    def iter_triples_random(self, count: int, seed: int) -> Iterator[tuple[int, int, int]]:
        rng = random.Random(seed)
        d = self.dim
        for _ in range(count):
            yield rng.randrange(d), rng.randrange(d), rng.randrange(d)

    def check_jacobi(self, triples=None) -> list[tuple[int, int, int]]:
        """Triples violating the Jacobi identity (exhaustive when ``triples`` is None)."""
        bad = []
        if triples is None:
            d = self.dim
            triples = ((i, j, k) for i in range(d) for j in range(d) for k in range(d))
        for t in triples:
            if self.jacobi_defect(*t):
                bad.append(t)
        return bad

    def check_antisymmetry(self) -> bool:
        return all(self.n_table[(b, a)] == -v for (a, b), v in self.n_table.items())

    def check_chain_lengths(self) -> bool:
        rs = self.rs
        return all(abs(v) == rs.string_down(a, b) + 1 for (a, b), v in self.n_table.items())


_CACHE: dict = {}


def build_constants(rs: RootSystem | R.LieType | str) -> StructureConstants:
    if not isinstance(rs, RootSystem):
        rs = R.build(rs)
    key = rs.lie_type
    if key not in _CACHE:
        _CACHE[key] = StructureConstants(rs)
    return _CACHE[key]


def regular_nilpotent(sc: StructureConstants) -> ChevElement:
    return sc.element(sc.rs.simple_roots)
