"""Standard parabolic subalgebras: descriptors, conversions and niceness.

A classical parabolic is given by the block lengths of its standard Levi
factor (symmetric for B, C, D); any parabolic is given by a 0/1 crossing
tuple, 1 marking the simple roots that lie in the nilradical.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from . import roots as R
from .classical import GradedModel, MatrixAlgebra, matrix_size
from .roots import LieType


class ParabolicError(ValueError):
    pass


RULES = ("A/C-unimodal", "B-pattern", "D-case1", "D-case2", "D-case3", "not-nice")


def normalize_blocks(family: str, blocks: Sequence[int]) -> tuple[int, ...]:
    """Rewrite a central (.., 1, 1, ..) of so_2n as (.., 2, ..)."""
    b = tuple(int(x) for x in blocks)
    if family == "D" and len(b) % 2 == 0 and len(b) >= 2:
        h = len(b) // 2
        if b[h - 1] == 1 and b[h] == 1:
            return b[:h - 1] + (2,) + b[h + 1:]
    return b


def rank_from_blocks(family: str, blocks: Sequence[int]) -> int:
    n = sum(blocks)
    if family == "A":
        return n - 1
    if family == "B":
        if n % 2 == 0:
            raise ParabolicError(f"type B needs an odd matrix size, got {n}")
        return (n - 1) // 2
    if family in "CD":
        if n % 2:
            raise ParabolicError(f"type {family} needs an even matrix size, got {n}")
        return n // 2
    raise ParabolicError(f"type {family} is not classical")


@dataclass(frozen=True)
class ParabolicDesc:
    lie_type: LieType
    crossing: tuple[int, ...]
    blocks: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.crossing) != self.lie_type.rank or any(u not in (0, 1) for u in self.crossing):
            raise ParabolicError(f"bad crossing tuple {self.crossing} for {self.lie_type}")

    @classmethod
    def from_blocks(cls, family: str, blocks: Sequence[int]) -> "ParabolicDesc":
        family = family.upper()
        if any(int(b) <= 0 for b in blocks) or not blocks:
            raise ParabolicError(f"block lengths must be positive: {tuple(blocks)}")
        b = normalize_blocks(family, blocks)
        t = LieType(family, rank_from_blocks(family, b))
        if family != "A" and tuple(reversed(b)) != b:
            raise ParabolicError(f"blocks {b} are not symmetric")
        m = GradedModel(MatrixAlgebra(t, gl=(family == "A")), b)
        return cls(t, m.crossing(), b)

    @classmethod
    def from_tuple(cls, lie_type: LieType | str, crossing: Sequence[int]) -> "ParabolicDesc":
        if isinstance(lie_type, str):
            lie_type = LieType.parse(lie_type)
        u = tuple(int(x) for x in crossing)
        blocks = tuple_to_blocks(lie_type, u) if lie_type.is_classical else None
        return cls(lie_type, u, blocks)

    @property
    def family(self) -> str:
        return self.lie_type.family

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def model(self) -> GradedModel:
        if self.blocks is None:
            raise ParabolicError(f"{self.lie_type} has no matrix model")
        return GradedModel(MatrixAlgebra(self.lie_type, gl=(self.family == "A")), self.blocks)

    @property
    def case(self) -> str | None:
        """'A' for an even number of blocks, 'B' for odd (orthogonal/symplectic only)."""
        if self.blocks is None or self.family == "A":
            return None
        return "A" if len(self.blocks) % 2 == 0 else "B"

    def half(self) -> tuple[int, ...]:
        """(a_1..a_r) in case A, (a_1..a_r, a_{r+1}) in case B; all blocks in type A."""
        b = self.blocks
        if b is None:
            raise ParabolicError("no block description")
        if self.family == "A":
            return b
        return b[:(len(b) + 1) // 2]

    def to_json(self) -> dict:
        return {
            "type": self.family,
            "rank": self.rank,
            "blocks": list(self.blocks) if self.blocks is not None else None,
            "tuple": list(self.crossing),
        }

    def __str__(self) -> str:
        if self.blocks is not None:
            return f"{self.lie_type}{list(self.blocks)}"
        return f"{self.lie_type}:{''.join(map(str, self.crossing))}"


def blocks_to_tuple(p: ParabolicDesc) -> tuple[int, ...]:
    return p.crossing


def tuple_to_blocks(t: LieType, u: Sequence[int]) -> tuple[int, ...]:
    f, n = t.family, t.rank
    u = tuple(u)
    if len(u) != n:
        raise ParabolicError("tuple length does not match rank")

    def split(positions: int, cuts: Sequence[int]) -> list[int]:
        # cuts[k] == 1 splits between position k and k+1
        out, cur = [], 1
        for k in range(positions - 1):
            if cuts[k]:
                out.append(cur)
                cur = 1
            else:
                cur += 1
        out.append(cur)
        return out

    if f == "A":
        return tuple(split(n + 1, u))
    if f in "BC":
        half = split(n, u[:n - 1])
        if u[n - 1]:
            mid = [1] if f == "B" else []
        else:
            last = half.pop()
            mid = [2 * last + (1 if f == "B" else 0)]
        return tuple(half + mid + half[::-1])
    if f == "D":
        a, b = u[n - 2], u[n - 1]
        if a and not b:
            raise ParabolicError("crossing (.., 1, 0) at the fork of D has no block description")
        if a and b:
            half = split(n - 1, u[:n - 2])
            return tuple(half + [2] + half[::-1])
        if b:
            half = split(n, u[:n - 1])
            return tuple(half + half[::-1])
        half = split(n, u[:n - 1])
        last = half.pop()
        return tuple(half + [2 * last] + half[::-1])
    raise ParabolicError(f"{t} is not classical")


# --- niceness ----------------------------------------------------------------

def is_unimodal(seq: Sequence[int]) -> bool:
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    while k + 1 < len(seq) and seq[k] >= seq[k + 1]:
        k += 1
    return k >= len(seq) - 1


def dip_pattern(seq: Sequence[int], strict: bool) -> tuple[int, int, int] | None:
    """Match a_1 <= .. (<) a_l > b_1 = .. = b_s < a_l >= .. >= a_1 with b_1 = a_l - 1.

    Returns (l, s, b_1) with l 1-based, or None.  With ``strict`` the step
    into a_l must be a strict increase.
    """
    m = len(seq)
    l = next((k for k in range(m - 1) if seq[k] > seq[k + 1]), None)
    if l is None:
        return None
    top = seq[l]
    if any(seq[k] > seq[k + 1] for k in range(l)):
        return None
    if strict and l >= 1 and not seq[l - 1] < seq[l]:
        return None
    k = l + 1
    while k < m and seq[k] == top - 1:
        k += 1
    s = k - l - 1
    if s < 1 or k >= m or seq[k] != top:
        return None
    if any(seq[j] < seq[j + 1] for j in range(k, m - 1)):
        return None
    return (l + 1, s, top - 1)


def odd_lengths_twice(seq: Sequence[int]) -> bool:
    c = Counter(seq)
    return all(v == 2 for k, v in c.items() if k % 2)


@dataclass(frozen=True)
class NicenessVerdict:
    nice: bool
    rule: str
    witness: dict | None = field(default=None)

    def to_json(self) -> dict:
        return {"nice": self.nice, "rule": self.rule, "witness": self.witness}


def is_nice(p: ParabolicDesc) -> NicenessVerdict:
    if not p.lie_type.is_classical:
        raise ParabolicError("exceptional type: use the exceptional table module")
    f, b = p.family, p.blocks
    assert b is not None
    uni = is_unimodal(b)
    if f == "A":
        return NicenessVerdict(uni, "A/C-unimodal" if uni else "not-nice")
    if f == "C":
        # With an odd number of blocks the middle sp factor forces x^2 to
        # vanish across a repeated odd pair (e.g. (1,1,2,1,1)), so unimodality
        # alone is not enough there.
        if uni and (len(b) % 2 == 0 or odd_lengths_twice(b)):
            return NicenessVerdict(True, "A/C-unimodal")
        return NicenessVerdict(False, "not-nice", {"unimodal": uni} if uni else None)
    if f == "B":
        if uni:
            return NicenessVerdict(True, "B-pattern", {"unimodal": True})
        w = dip_pattern(b, strict=True)
        if w:
            return NicenessVerdict(True, "B-pattern", {"l": w[0], "s": w[1], "b1": w[2]})
        return NicenessVerdict(False, "not-nice")
    # type D
    if uni and len(b) % 2 == 1:
        return NicenessVerdict(True, "D-case1")
    if uni and odd_lengths_twice(b):
        return NicenessVerdict(True, "D-case2")
    # the step into a_l must be strict here as well: (3,3,2,3,3) is not nice
    w = dip_pattern(b, strict=True)
    if w and (b[w[0] - 1] % 2 == 1) and (w[1] % 2 == 1 or odd_lengths_twice(b)):
        return NicenessVerdict(True, "D-case3", {"l": w[0], "s": w[1], "b1": w[2]})
    return NicenessVerdict(False, "not-nice")


def levi_dim(p: ParabolicDesc) -> int:
    """Dimension of the standard Levi factor (gl convention in type A)."""
    if p.blocks is not None:
        return p.model().levi_dim
    rs = R.build(p.lie_type)
    zero = sum(1 for r in rs.positives if rs.level(r, p.crossing) == 0)
    return p.rank + 2 * zero


def nilradical_dim(p: ParabolicDesc) -> int:
    if p.blocks is not None:
        return p.model().nilradical_dim
    rs = R.build(p.lie_type)
    return sum(1 for r in rs.positives if rs.level(r, p.crossing) > 0)


# --- enumeration ---------------------------------------------------------------

def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def symmetric_compositions(n: int) -> Iterator[tuple[int, ...]]:
    out = set()
    for half_total in range(0, n // 2 + 1):
        mid = n - 2 * half_total
        for half in compositions(half_total):
            if mid:
                out.add(half + (mid,) + half[::-1])
            elif half:
                out.add(half + half[::-1])
    yield from sorted(out)


def all_parabolics(family: str, rank: int) -> list[ParabolicDesc]:
    """Every standard parabolic of the classical algebra, one per normalized block sequence."""
    n = matrix_size(family, rank)
    seqs = compositions(n) if family == "A" else symmetric_compositions(n)
    seen: dict[tuple[int, ...], ParabolicDesc] = {}
    for s in seqs:
        b = normalize_blocks(family, s)
        if b not in seen:
            seen[b] = ParabolicDesc.from_blocks(family, b)
    return [seen[b] for b in sorted(seen)]


def enumerate_nice(family: str, max_rank: int, min_rank: int | None = None) -> list[ParabolicDesc]:
    lo = min_rank if min_rank is not None else {"A": 1, "B": 1, "C": 1, "D": 2}[family]
    out = []
    for n in range(lo, max_rank + 1):
        out.extend(p for p in all_parabolics(family, n) if is_nice(p).nice)
    return out


def all_crossings(t: LieType) -> Iterator[tuple[int, ...]]:
    yield from product((0, 1), repeat=t.rank)
