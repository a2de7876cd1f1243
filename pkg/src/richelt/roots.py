"""Root systems of the simple Lie algebras in Bourbaki numbering.

Roots are integer coefficient tuples over the simple roots.  The
symmetric form is normalized so that long roots have squared length 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

Root = tuple[int, ...]

FAMILIES = "ABCDEFG"


class InvalidTypeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in FAMILIES:
            raise InvalidTypeError(f"unknown family {f!r}")
        # B1, C1 (so3, sp2) and D2 (so4) are kept for the matrix models
        ok = {
            "A": n >= 1,
            "B": n >= 1,
            "C": n >= 1,
            "D": n >= 2,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            raise InvalidTypeError(f"invalid rank {n} for type {f}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip().upper()
        try:
            return cls(text[0], int(text[1:]))
        except (IndexError, ValueError):
            raise InvalidTypeError(f"cannot parse Lie type {text!r}") from None

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(t: LieType) -> list[list[int]]:
    """Cartan matrix with entry [i][j] = <alpha_i, alpha_j^vee>, Bourbaki order."""
    f, n = t.family, t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if f in "ABCD":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B" and n >= 2:
            # alpha_n short
            link(n - 2, n - 1, aij=-2, aji=-1)
        elif f == "C" and n >= 2:
            # alpha_n long
            link(n - 2, n - 1, aij=-1, aji=-2)
        elif f == "D":
            if n == 2:
                a = [[2, 0], [0, 2]]
            else:
                a[n - 2][n - 1] = a[n - 1][n - 2] = 0
                link(n - 3, n - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, aij=-2, aji=-1)
        link(2, 3)
    elif f == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, aij=-1, aji=-3)
    return a


def _simple_lengths(cartan: list[list[int]]) -> list[Fraction]:
    """Squared lengths d_i with d_i * a_ji = d_j * a_ij, long roots = 2 per component."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        k = 0
        while k < len(comp):
            i = comp[k]
            k += 1
            for j in range(n):
                if cartan[i][j] and d[j] is None:
                    # (a_i, a_j) = a_ij d_j / 2 = a_ji d_i / 2
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    comp.append(j)
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] * 2 / top
    return d  # type: ignore[return-value]


def height(r: Root) -> int:
    return sum(r)


def root_label(r: Root) -> str:
    """Compact label in the alpha_I notation, e.g. (1,1,1,2,1,0) -> 'a_1234^25'."""
    if all(c <= 0 for c in r):
        return "-" + root_label(tuple(-c for c in r))
    parts = []
    for i, c in enumerate(r, start=1):
        if c == 1:
            parts.append(str(i))
        elif c > 1:
            parts.append(f"{i}^{c}")
    return "a_" + "".join(parts)


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    positives: tuple[Root, ...]
    bilinear: tuple[tuple[Fraction, ...], ...]
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """All roots: positives followed by their negatives."""
        return self.positives + tuple(neg(r) for r in self.positives)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @cached_property
    def highest_root(self) -> Root:
        return self.positives[-1]

    @cached_property
    def _roots_set(self) -> frozenset:
        return frozenset(self.roots)

    def index(self, r: Root) -> int:
        """Position of a positive root in ``positives``."""
        return self._index[tuple(r)]

    def is_root(self, v: Iterable[int]) -> bool:
        v = tuple(v)
        if len(v) != self.rank:
            raise ValueError(f"vector of length {len(v)} in rank {self.rank}")
        return v in self._roots_set

    def is_positive(self, v: Iterable[int]) -> bool:
        return tuple(v) in self._index

    def form(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        b = self.bilinear
        return sum((Fraction(xi) * b[i][j] * yj for i, xi in enumerate(x) if xi for j, yj in enumerate(y) if yj),
                   Fraction(0))

    def norm(self, x: Sequence[int]) -> Fraction:
        return self.form(x, x)

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Cartan integer <a, b^vee> = 2(a, b)/(b, b)."""
        nb = self.norm(b)
        if nb == 0:
            raise ValueError("pairing with the zero vector")
        val = 2 * self.form(a, b) / nb
        if val.denominator != 1:
            raise ValueError(f"non-integral pairing {val} for {a}, {b}")
        return int(val)

    def is_long(self, r: Sequence[int]) -> bool:
        return self.norm(r) == 2

    def string_down(self, a: Root, b: Root) -> int:
        """Largest p with b - p*a a root (b assumed a root)."""
        p = 0
        while self.is_root(sub(b, mul(a, p + 1))):
            p += 1
        return p

    def level(self, r: Sequence[int], crossing: Sequence[int]) -> int:
        """Grade of a root for the parabolic given by a 0/1 crossing tuple."""
        return sum(c * u for c, u in zip(r, crossing))


def add(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence[int]) -> Root:
    return tuple(-x for x in a)


def mul(a: Sequence[int], k: int) -> Root:
    return tuple(k * x for x in a)


_CACHE: dict[LieType, RootSystem] = {}


def build(t: LieType | str) -> RootSystem:
    """Positive roots by string closure from the Cartan matrix.

    Ordered by height, then lexicographically on the coefficient vector.
    """
    if isinstance(t, str):
        t = LieType.parse(t)
    if t in _CACHE:
        return _CACHE[t]
    cartan = cartan_matrix(t)
    n = t.rank
    d = _simple_lengths(cartan)
    bil = tuple(tuple(Fraction(cartan[i][j]) * d[j] / 2 for j in range(n)) for i in range(n))

    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    allpos = list(simple)
    while layer:
        nxt = set()
        for b in layer:
            for i in range(n):
                # alpha_i-string through b: p - q = <b, alpha_i^vee>
                ai = simple[i]
                if b == ai:
                    continue
                p = 0
                while sub(b, mul(ai, p + 1)) in known:
                    p += 1
                pair = sum(b[k] * cartan[k][i] for k in range(n))
                q = p - pair
                if q > 0:
                    c = add(b, ai)
                    if c not in known:
                        nxt.add(c)
        known |= nxt
        layer = sorted(nxt)
        allpos.extend(layer)
    positives = tuple(sorted(allpos, key=lambda r: (sum(r), r)))
    rs = RootSystem(t, tuple(map(tuple, cartan)), positives, bil, {r: i for i, r in enumerate(positives)})
    _CACHE[t] = rs
    return rs


POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def expected_positive_count(t: LieType) -> int:
    return POSITIVE_ROOT_COUNT[t.family](t.rank)


# --- support-set predicates -------------------------------------------------

def is_independent(vectors: Sequence[Sequence[int]]) -> bool:
    from .linalg import sparse_rank
    rows = [{j: v for j, v in enumerate(vec) if v} for vec in vectors]
    return sparse_rank(rows) == len(vectors)


def subtracting_pairs(rs: RootSystem, support: Iterable[Sequence[int]]) -> list[tuple[Root, Root]]:
    """All pairs (a, b) of distinct members with a - b a root."""
    s = [tuple(r) for r in support]
    out = []
    for a, b in combinations(s, 2):
        if rs.is_root(sub(a, b)):
            out.append((a, b))
    return out


def is_simple_system(rs: RootSystem, support: Iterable[Sequence[int]]) -> bool:
    s = list(dict.fromkeys(tuple(r) for r in support))
    if not s:
        raise ValueError("empty support set")
    return not subtracting_pairs(rs, s) and is_independent(s)


def _standard_cartans(k: int) -> list[tuple[LieType, list[list[int]]]]:
    out = []
    for f in "ABCDEFG":
        try:
            t = LieType(f, k)
        except InvalidTypeError:
            continue
        if (f in "BC" and k < 2) or (f == "D" and k < 4):
            continue
        out.append((t, cartan_matrix(t)))
    return out


def identify_cartan(cm: Sequence[Sequence[int]]) -> LieType | None:
    """Finite type of an indecomposable Cartan matrix, trying every node order."""
    k = len(cm)
    if k == 1:
        return LieType("A", 1) if cm[0][0] == 2 else None
    cands = _standard_cartans(k)
    # quick invariants before permuting
    sig = sorted(sorted(row) for row in cm)
    for t, ref in cands:
        if sorted(sorted(row) for row in ref) != sig:
            continue
        for perm in _permutations_matching(cm, ref):
            return t
    return None


def _permutations_matching(cm, ref):
    k = len(cm)
    # backtracking search for perm with cm[perm[i]][perm[j]] == ref[i][j]
    perm: list[int] = []
    used = [False] * k

    def rec(i):
        if i == k:
            yield list(perm)
            return
        for c in range(k):
            if used[c]:
                continue
            if all(cm[c][perm[j]] == ref[i][j] and cm[perm[j]][c] == ref[j][i] for j in range(i)):
                used[c] = True
                perm.append(c)
                yield from rec(i + 1)
                perm.pop()
                used[c] = False

    yield from rec(0)


NOT_SIMPLE = "not a simple system"


def factor_decomposition(rs: RootSystem, support: Iterable[Sequence[int]]) -> list[tuple[list[Root], LieType | str]]:
    """Connected components of the support under nonzero Cartan pairings, with their types.

    A component whose Cartan-integer matrix is not of finite type is reported
    with the marker ``NOT_SIMPLE`` instead of a type.
    """
    s = list(dict.fromkeys(tuple(r) for r in support))
    if not is_independent(s):
        raise ValueError("support is linearly dependent")
    k = len(s)
    cm = [[rs.pairing(s[i], s[j]) for j in range(k)] for i in range(k)]
    seen = [False] * k
    comps = []
    for i in range(k):
        if seen[i]:
            continue
        comp, stack = [], [i]
        seen[i] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in range(k):
                if not seen[v] and (cm[u][v] or cm[v][u]):
                    seen[v] = True
                    stack.append(v)
        comp.sort()
        sub_cm = [[cm[a][b] for b in comp] for a in comp]
        t = identify_cartan(sub_cm) if all(cm[a][a] == 2 for a in comp) else None
        comps.append(([s[a] for a in comp], t if t is not None else NOT_SIMPLE))
    return comps


def factor_types(rs: RootSystem, support: Iterable[Sequence[int]]) -> list[str]:
    return sorted(str(t) for _, t in factor_decomposition(rs, support))
