"""Command line front end.

JSON goes to stdout, prose (``--explain``) to stderr.  Exit codes: 0 success,
3 negative but valid result, 2 usage error, 1 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import roots as R
from .classical import ModelError
from .parabolic import ParabolicDesc, ParabolicError, enumerate_nice, is_nice, levi_dim, nilradical_dim
from .recipe import RecipeError, SelfVerificationError, build_xr, is_star_form
from .roots import InvalidTypeError, LieType
from .tables import TableError, find_row, load_table, search_simple_support, verify_row
from .verify import (DEFAULT_SEEDS, centralizer_dim_formula, centralizer_dim_formula_printed,
                     generic_centralizer_dim, jordan_data)

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_NEGATIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _explain(args, text: str) -> None:
    if getattr(args, "explain", False):
        sys.stderr.write(text.rstrip() + "\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise UsageError(f"expected comma separated integers, got {text!r}") from exc


def _descriptor(args) -> ParabolicDesc:
    family = args.type.upper()
    if args.blocks is not None:
        if family not in "ABCD" or len(family) != 1:
            raise UsageError("--blocks needs a classical type A, B, C or D")
        return ParabolicDesc.from_blocks(family, _ints(args.blocks))
    if args.tuple is not None:
        u = _ints(args.tuple)
        name = family if any(ch.isdigit() for ch in family) else f"{family}{len(u)}"
        return ParabolicDesc.from_tuple(LieType.parse(name), u)
    raise UsageError("give --blocks or --tuple")


def _seeds(args) -> tuple[int, ...]:
    if args.seed is None:
        return DEFAULT_SEEDS
    return tuple(args.seed + k for k in range(3))


# --- subcommands ---------------------------------------------------------------

def cmd_classify(args) -> int:
    p = _descriptor(args)
    v = is_nice(p)
    out = {**p.to_json(), "nice": v.nice, "rule": v.rule, "witness": v.witness}
    if args.oracle:
        m = p.model()
        gen = generic_centralizer_dim(m, _seeds(args))
        out["oracle"] = {"generic_centralizer": gen, "levi_dim": m.levi_dim,
                         "nice": gen == m.levi_dim, "seeds": list(_seeds(args))}
    _emit(out)
    _explain(args, f"{p}: {'nice' if v.nice else 'not nice'} ({v.rule})")
    return EXIT_OK if v.nice else EXIT_NEGATIVE


def _candidate(args):
    p = _descriptor(args)
    if not is_nice(p).nice:
        _emit({**p.to_json(), "nice": False})
        _explain(args, f"{p} is not nice; no recipe element exists in g_1")
        return p, None
    return p, build_xr(p)


def cmd_construct(args) -> int:
    p, c = _candidate(args)
    if c is None:
        return EXIT_NEGATIVE
    _emit(c.to_json())
    _explain(args, f"{p}: {len(c.support)} roots in the support, variant {c.variant}")
    return EXIT_OK


def verify_payload(p: ParabolicDesc) -> dict:
    c = build_xr(p)
    jd = jordan_data(c.matrix)
    rep = c.report
    return {
        "blocks": list(p.blocks),
        "type": p.family,
        "rank": p.rank,
        "jordan": list(jd.partition),
        "dual": list(jd.dual),
        "centralizer_formula": centralizer_dim_formula(p.family, jd.partition),
        "centralizer_direct": rep.centralizer_direct,
        "levi_dim": rep.levi_dim,
        "bracket_image": rep.bracket_image,
        "nilradical_dim": rep.nilradical_dim,
        "richardson": rep.richardson,
    }


def cmd_verify(args) -> int:
    p, c = _candidate(args)
    if c is None:
        return EXIT_NEGATIVE
    out = verify_payload(p)
    _emit(out)
    if p.family != "A":
        printed = centralizer_dim_formula_printed(p.family, out["jordan"])
        _explain(args, "centralizer formula uses the factor 1/2 on the whole expression; "
                       f"without it the value would be {printed} instead of {out['centralizer_formula']}")
    return EXIT_OK if out["richardson"] else EXIT_NEGATIVE


def cmd_support(args) -> int:
    p, c = _candidate(args)
    if c is None:
        return EXIT_NEGATIVE
    rs = R.build(p.lie_type)
    sup = c.support
    simple = bool(sup) and R.is_simple_system(rs, sup)
    out = {
        "blocks": list(p.blocks),
        "support": [list(r) for r in sup],
        "labels": [R.root_label(r) for r in sup],
        "size": len(sup),
        "simple_system": simple,
        "factors": R.factor_types(rs, sup) if simple else [],
        "subtracting_pairs": [[list(a), list(b)] for a, b in R.subtracting_pairs(rs, sup)],
    }
    if p.family in "BD":
        out["star_form"] = is_star_form(p)
    _emit(out)
    return EXIT_OK


def _scan_one(p: ParabolicDesc) -> tuple[list[int], str | None]:
    try:
        d = verify_payload(p)
        if d["centralizer_formula"] != d["centralizer_direct"]:
            return list(p.blocks), "centralizer formula disagrees with direct computation"
        return list(p.blocks), None
    except (SelfVerificationError, RecipeError, ModelError) as exc:
        return list(p.blocks), str(exc)


def cmd_scan(args) -> int:
    family = args.type.upper()
    if family not in ("A", "B", "C", "D"):
        raise UsageError("scan needs a classical type")
    ps = enumerate_nice(family, args.max_rank, args.min_rank)
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_scan_one, ps, chunksize=8))
    else:
        results = [_scan_one(p) for p in ps]
    failed = [{"blocks": b, "error": e} for b, e in results if e is not None]
    _emit({"type": family, "max_rank": args.max_rank, "total": len(results),
           "passed": len(results) - len(failed), "failed": failed})
    _explain(args, f"{len(results) - len(failed)}/{len(results)} recipe elements verified")
    return EXIT_OK if not failed else EXIT_INTERNAL


def cmd_exceptional(args) -> int:
    rows = load_table(args.data)
    if args.case:
        rows = [find_row(rows, args.case)]
    elif not args.all:
        raise UsageError("give --all or --case")
    ok = True
    for row in rows:
        if row.expects_none:
            _emit({"row": row.key, "expects_none": True, "starred": row.starred,
                   "note": "checked by the search subcommand"})
            continue
        rep = verify_row(row)
        ok &= rep.passed
        _emit(rep.to_json())
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_search(args) -> int:
    name, _, bits = args.case.partition(":")
    if not bits:
        raise UsageError("--case must look like G2:10")
    rep = search_simple_support(LieType.parse(name), [int(c) for c in bits], args.cutoff)
    _emit(rep.to_json())
    _explain(args, f"{rep.nodes_explored} nodes, {rep.candidates_tested} maximal candidates tested")
    return EXIT_OK if rep.found is not None else EXIT_NEGATIVE


# --- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="richelt", description="Richardson elements of parabolic subalgebras")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--explain", action="store_true", help="human readable notes on stderr")
        p.add_argument("--seed", type=int, default=None, help="base seed for generic elements")

    def selector(p):
        p.add_argument("--type", required=True, help="A, B, C, D, or a full name like F4")
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--blocks", help="block lengths, e.g. 1,2,1")
        g.add_argument("--tuple", help="crossing tuple, e.g. 1,0,1")

    for name, fn, helptext in (("classify", cmd_classify, "niceness verdict"),
                               ("construct", cmd_construct, "recipe element"),
                               ("verify", cmd_verify, "Jordan data and Richardson test"),
                               ("support", cmd_support, "support structure")):
        p = sub.add_parser(name, help=helptext)
        selector(p)
        common(p)
        if name == "classify":
            p.add_argument("--oracle", action="store_true", help="also run the generic-element oracle")
        p.set_defaults(func=fn)

    p = sub.add_parser("scan", help="verify every nice parabolic up to a rank")
    p.add_argument("--type", required=True)
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--min-rank", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("exceptional", help="verify the exceptional table rows")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--case", help="e.g. E6:110100")
    p.add_argument("--data", default=None, help="table file (default: RICHELT_DATA or the packaged table)")
    common(p)
    p.set_defaults(func=cmd_exceptional)

    p = sub.add_parser("search", help="search for a simple-support Richardson element")
    p.add_argument("--case", required=True, help="e.g. G2:10")
    p.add_argument("--cutoff", type=int, default=10 ** 6)
    common(p)
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParabolicError, InvalidTypeError, TableError, ModelError) as exc:
        sys.stderr.write(f"richelt: {exc}\n")
        return EXIT_USAGE
    except (SelfVerificationError, RecipeError) as exc:
        sys.stderr.write(f"richelt: internal error: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
