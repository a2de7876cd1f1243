"""Normal-form Richardson elements X_R for nice classical parabolics.

Each rectangle R_{i,i+1} (block i to block i+1, 1-based) receives one or two
anti-diagonal patterns J_k anchored at a corner.  Entries chosen in the
upper-left half carry coefficient +1, the mirrored entries get the sign
forced by the bilinear form.  Every candidate is checked with the bracket
criterion before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classical import GradedModel, Rectangle, Sparse, add_sparse, sparse_to_matrix
from .linalg import ExactMatrix
from .parabolic import ParabolicDesc, dip_pattern, is_nice, is_unimodal
from .roots import Root
from .verify import RichardsonReport, richardson_report


class RecipeError(ValueError):
    pass


class SelfVerificationError(RuntimeError):
    """A constructed candidate failed the bracket criterion (a placement bug)."""


Local = list[tuple[int, int]]


def ceil_half(a: int) -> int:
    return (a + 1) // 2


def floor_half(a: int) -> int:
    return a // 2


# --- local patterns inside a p x q rectangle ---------------------------------

def j_at(k: int, r0: int, c0: int) -> Local:
    """Positions of J_k with its top-left corner at (r0, c0)."""
    return [(r0 + t, c0 + k - 1 - t) for t in range(k)]


def j_left(k: int, p: int, q: int) -> Local:
    return j_at(k, 0, 0)


def j_right(k: int, p: int, q: int) -> Local:
    return j_at(k, 0, q - k)


def j_top(k: int, p: int, q: int) -> Local:
    return j_at(k, 0, 0)


def j_bottom(k: int, p: int, q: int) -> Local:
    return j_at(k, p - k, 0)


def j_upper_right(k: int, p: int, q: int) -> Local:
    return j_at(k, 0, q - k)


def j_lower_left(k: int, p: int, q: int) -> Local:
    return j_at(k, p - k, 0)


def two_corners(upper: int, lower: int, p: int, q: int) -> Local:
    """J_upper in the upper-right corner plus J_lower in the lower-left corner."""
    out = j_upper_right(upper, p, q) + j_lower_left(lower, p, q)
    seen, uniq = set(), []
    for e in out:
        if e not in seen:
            seen.add(e)
            uniq.append(e)
    return uniq


@dataclass(frozen=True)
class Placement:
    rectangle: int
    branch: str
    local: tuple[tuple[int, int], ...]


@dataclass
class NilpotentCandidate:
    model: GradedModel
    matrix: ExactMatrix
    entries: list[tuple[int, int]]
    support: list[Root]
    placements: list[Placement] = field(default_factory=list)
    report: RichardsonReport | None = None
    variant: str = "standard"

    @property
    def verified(self) -> bool:
        return self.report is not None and self.report.richardson

    def to_json(self) -> dict:
        alg = self.model.algebra
        ents = []
        for (i, j), v in sorted(self.matrix.nonzero().items()):
            ents.append([i + 1, j + 1, str(v)])
        return {
            "blocks": list(self.model.blocks),
            "variant": self.variant,
            "entries": ents,
            "chosen": [[i + 1, j + 1] for i, j in self.entries],
            "support": [list(r) for r in self.support],
            "provenance": [{"rectangle": p.rectangle, "branch": p.branch} for p in self.placements],
            "verified": self.verified,
            "algebra": alg.name,
        }


# --- placement tables ----------------------------------------------------------

def _type_a_rect(i: int, p: int, q: int) -> tuple[str, Local]:
    if p <= q:
        return ("J_a left" if i % 2 else "J_a right",
                j_left(p, p, q) if i % 2 else j_right(p, p, q))
    return ("J_a+1 bottom" if i % 2 else "J_a+1 top",
            j_bottom(q, p, q) if i % 2 else j_top(q, p, q))


def _c_case_b_rect(i: int, p: int, q: int) -> tuple[str, Local]:
    b, B = floor_half(p), ceil_half(p)
    if i % 2:
        return "J_b upper-right, J_B lower-left", two_corners(b, B, p, q)
    return "J_B upper-right, J_b lower-left", two_corners(B, b, p, q)


def _bd_case_b_rect(i: int, p: int, q: int) -> tuple[str, Local]:
    B = ceil_half(p)
    if p % 2 == q % 2:
        if p > q:
            raise RecipeError(f"same-parity decrease {p} > {q} in rectangle {i}")
        if p % 2 == 0:
            # a centred J_{a_i} is not generic here, e.g. (2,4,3,4,2)
            return "J_b upper-right, J_B lower-left", two_corners(p // 2, p // 2, p, q)
        # J_{a_i} centred; the offset is an integer because q - p is even
        return "J_a centred", j_at(p, 0, (q - p) // 2)
    if p == q + 1 and p % 2 == 0:
        if i % 2:
            return "J_B-1 upper-right, J_B lower-left", two_corners(B - 1, B, p, q)
        return "J_B upper-right, J_B-1 lower-left", two_corners(B, B - 1, p, q)
    return "J_B upper-right, J_B lower-left", two_corners(B, B, p, q)


def _hat_rect(i: int, p: int, q: int) -> tuple[str, Local]:
    b, B = floor_half(p), ceil_half(p)
    if i % 2:
        return "hat: J_b upper-right, J_B lower-left", two_corners(b, B, p, q)
    return "hat: J_B upper-right, J_b lower-left", two_corners(B, b, p, q)


def _central_square(family: str, r: int, m: int) -> tuple[str, Local]:
    if family == "C":
        return "J_a anti-diagonal", j_at(m, 0, 0)
    # so_2n: two-by-two blocks diag(1, -1); only the canonical +1 entries are listed
    b = m // 2
    if r % 2:
        return "2x2 blocks from lower-left", [(m - 2 - 2 * t, 2 * t) for t in range(b)]
    return "2x2 blocks from upper-right", [(2 * t, m - 2 - 2 * t) for t in range(b)]


def hat_index(p: ParabolicDesc) -> int | None:
    """Rectangle index l-1 where the hat replacement applies, if any."""
    if p.family != "B" or p.blocks is None:
        return None
    b = p.blocks
    if is_unimodal(b):
        return None
    w = dip_pattern(b, strict=True)
    if w is None:
        return None
    l = w[0]
    if l < 2:
        return None
    if b[l - 2] % 2 == 1 and b[l - 2] == b[l]:
        return l - 1
    return None


def hat_precondition(p: ParabolicDesc) -> tuple[int | None, str | None]:
    """(index, None) when the hat variant can be formed, else (None, reason)."""
    if p.family != "B" or p.blocks is None:
        return None, "hat variant needs an odd orthogonal algebra"
    b = p.blocks
    if is_unimodal(b):
        return None, "block sequence is unimodal"
    w = dip_pattern(b, strict=True)
    if w is None:
        return None, "block sequence has no dip a_l > a_l+1"
    l = w[0]
    if l < 2:
        return None, "no block a_l-1 before the peak"
    if b[l - 2] % 2 == 0:
        return None, f"a_l-1 = {b[l - 2]} is even"
    if b[l - 2] != b[l]:
        return l - 1, f"a_l-1 = {b[l - 2]} differs from a_l+1 = {b[l]}"
    return l - 1, None


def _placements(p: ParabolicDesc, hat: int | None) -> list[tuple[Rectangle, str, Local]]:
    m = p.model()
    f = p.family
    k = len(p.blocks)
    out = []
    if f == "A":
        for rect in m.rectangles():
            br, loc = _type_a_rect(rect.index, rect.rows, rect.cols)
            out.append((rect, br, loc))
        return out
    r = k // 2
    case_b = k % 2 == 1
    last = r if case_b else r - 1
    for i in range(1, last + 1):
        rect = m.rectangle(i)
        a, c = rect.rows, rect.cols
        if hat is not None and i == hat:
            br, loc = _hat_rect(i, a, c)
        elif f == "C":
            if case_b:
                br, loc = _c_case_b_rect(i, a, c)
            else:
                br, loc = _type_a_rect(i, a, c)
        else:
            if case_b:
                br, loc = _bd_case_b_rect(i, a, c)
            else:
                br, loc = _type_a_rect(i, a, c)
        out.append((rect, br, loc))
    if not case_b:
        rect = m.rectangle(r)
        br, loc = _central_square(f, r, rect.rows)
        out.append((rect, br, loc))
    return out


def _assemble(p: ParabolicDesc, hat: int | None, variant: str) -> NilpotentCandidate:
    m = p.model()
    alg = m.algebra
    acc: Sparse = {}
    chosen: list[tuple[int, int]] = []
    placements = []
    for rect, br, loc in _placements(p, hat):
        for pq in loc:
            if not rect.contains(*rect.to_global(*pq)):
                raise RecipeError(f"placement {pq} outside rectangle {rect.index}")
        placements.append(Placement(rect.index, br, tuple(loc)))
        for pq in loc:
            i, j = rect.to_global(*pq)
            if (i, j) in chosen:
                continue
            chosen.append((i, j))
            if alg.family == "A":
                add_sparse(acc, {(i, j): Fraction(1)})
            else:
                a, b = alg.mirror(i, j)
                if (a, b) in acc and (a, b) != (i, j):
                    raise RecipeError(f"entry {(i, j)} collides with its mirror")
                acc[(i, j)] = Fraction(1)
                if (a, b) != (i, j):
                    acc[(a, b)] = Fraction(alg.mirror_sign(i, j))
    x = sparse_to_matrix(alg.N, acc)
    support: list[Root] = []
    for i, j in chosen:
        root = m.entry_to_root(i, j)
        if root not in support:
            support.append(root)
    return NilpotentCandidate(m, x, chosen, support, placements, variant=variant)


def _self_verify(c: NilpotentCandidate, p: ParabolicDesc) -> NilpotentCandidate:
    rep = richardson_report(c.model, c.matrix)
    c.report = rep
    if not rep.richardson:
        detail = "; ".join(f"R{pl.rectangle}: {pl.branch} {list(pl.local)}" for pl in c.placements)
        raise SelfVerificationError(
            f"{c.variant} candidate for {p} is not Richardson: centralizer {rep.centralizer_direct} "
            f"vs levi {rep.levi_dim}, [p,x] {rep.bracket_image} vs n {rep.nilradical_dim}; {detail}")
    return c


def _require_nice(p: ParabolicDesc) -> None:
    if p.blocks is None:
        raise RecipeError(f"{p.lie_type} has no matrix model")
    v = is_nice(p)
    if not v.nice:
        raise RecipeError(f"parabolic {p} is not nice")


def build_xr(p: ParabolicDesc, verify: bool = True) -> NilpotentCandidate:
    """The recipe element, with the hat replacement where it applies."""
    _require_nice(p)
    hat = hat_index(p)
    c = _assemble(p, hat, "hat" if hat is not None else "standard")
    return _self_verify(c, p) if verify else c


def build_xr_plain(p: ParabolicDesc, verify: bool = True) -> NilpotentCandidate:
    """The recipe element without the hat replacement."""
    _require_nice(p)
    c = _assemble(p, None, "standard")
    return _self_verify(c, p) if verify else c


def build_xr_hat(p: ParabolicDesc) -> NilpotentCandidate:
    """Hat variant; refuses unless the replacement yields a Richardson element."""
    idx, reason = hat_precondition(p)
    if reason is not None:
        raise RecipeError(f"hat variant not applicable to {p}: {reason}")
    _require_nice(p)
    return _self_verify(_assemble(p, idx, "hat"), p)


def build_xr_hat_unchecked(p: ParabolicDesc) -> NilpotentCandidate:
    """Hat replacement at l-1 without the a_l-1 = a_l+1 requirement; reports, never raises on failure."""
    idx, reason = hat_precondition(p)
    if idx is None:
        raise RecipeError(f"hat replacement cannot be formed for {p}: {reason}")
    _require_nice(p)
    c = _assemble(p, idx, "hat")
    c.report = richardson_report(c.model, c.matrix)
    return c


def build_xr_identity_variant(p: ParabolicDesc) -> NilpotentCandidate:
    """Type A: identity blocks of size min(a_i, a_i+1) in the upper-left corner of each rectangle."""
    if p.family != "A":
        raise RecipeError("identity variant is defined for type A only")
    _require_nice(p)
    m = p.model()
    acc: Sparse = {}
    chosen, placements = [], []
    for rect in m.rectangles():
        k = min(rect.rows, rect.cols)
        loc = [(t, t) for t in range(k)]
        placements.append(Placement(rect.index, "I upper-left", tuple(loc)))
        for pq in loc:
            i, j = rect.to_global(*pq)
            chosen.append((i, j))
            acc[(i, j)] = Fraction(1)
    x = sparse_to_matrix(m.algebra.N, acc)
    support = []
    for i, j in chosen:
        rt = m.entry_to_root(i, j)
        if rt not in support:
            support.append(rt)
    return _self_verify(NilpotentCandidate(m, x, chosen, support, placements, variant="identity"), p)


# --- structure of the support ---------------------------------------------------

def is_star_form(p: ParabolicDesc) -> bool:
    """Orthogonal nice parabolics whose recipe support must contain a subtracting pair."""
    if p.family not in "BD":
        raise RecipeError("the (*) form is defined for orthogonal algebras only")
    _require_nice(p)
    b = p.blocks
    if len(b) % 2 == 0:
        # even number of blocks: every rectangle gets at most one entry per row and column
        return False
    r = len(b) // 2
    a = (0,) + b[:r + 1]            # 1-based: a[1..r+1]
    # steps i with a_i odd and a_{i+1} even
    steps = [i for i in range(1, r + 1) if a[i] % 2 == 1 and a[i + 1] % 2 == 0]
    if is_unimodal(b):
        return any(i < r for i in steps)
    w = dip_pattern(b, strict=True)
    assert w is not None
    l = w[0]
    if a[l] % 2 == 1:
        return True
    return any(i < l and (i != l - 1 or a[l - 1] < a[l + 1]) for i in steps)


def subtracting_pairs(rs, support) -> list[tuple[Root, Root]]:
    from . import roots as R
    return R.subtracting_pairs(rs, support)


def rectangle_support(c: NilpotentCandidate, i: int) -> list[Root]:
    """Roots of the entries chosen in rectangle i (S_1^i, mirrors share the root)."""
    m = c.model
    rect = m.rectangle(i)
    out = []
    for (a, b) in c.entries:
        if rect.contains(a, b):
            rt = m.entry_to_root(a, b)
            if rt not in out:
                out.append(rt)
    return out
