"""Command-line front end.

Exit status: 0 on success, 1 when a verified claim is refuted (or the two
c-gap routes disagree under ``--check-both``), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, codes, families, suzuki
from .core import (
    CGapQuery,
    CurveError,
    QueryError,
    curve_to_json,
    iter_pure_gaps,
    gaps_at_place,
    genus,
    is_c_gap_by_def,
    is_c_gap_criterion,
    load_curve_file,
    parse_place,
    rr_dim,
    validate_curve,
)

EPILOG = """\
curves: gk (--q), x1 (--q --n --m), x2 (--q --m), ggs (--q --n), or --curve-file spec.json
places: P1, P2, P_inf, or class:idx (class index, occurrence within the class)
tuples: for gk, x2 and --curve-file the tuple may be given as --n; for x1 and ggs
        --n is the tower exponent and the tuple goes in --tuple.

TSV output (puregaps): one pure gap per row, columns n1..ns, header line first.
TSV output (suzuki gaps|puregaps|classify): same layout.
JSON output is an envelope {"command", "curve", "result", "warnings"} with sorted keys.
"""

TOWER_CURVES = ("x1", "ggs")


class UsageError(Exception):
    pass


class _Curve:
    """A catalog curve or a curve read from a spec file, with its named places."""

    def __init__(self, curve, name, named, notes=(), catalog_curve=None):
        self.curve = curve
        self.name = name
        self.named = named
        self.notes = list(notes)
        self.catalog_curve = catalog_curve


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _load_curve(args) -> _Curve:
    if getattr(args, "curve_file", None):
        curve = load_curve_file(args.curve_file)
        return _Curve(curve, f"file:{args.curve_file}", {})
    if not args.curve:
        raise UsageError("give --curve or --curve-file")
    tower = args.n if args.curve in TOWER_CURVES else None
    try:
        tower = int(tower) if tower is not None else None
    except ValueError:
        raise UsageError(f"--n for {args.curve} is the tower exponent, got {args.n!r}") from None
    cc = catalog.build(args.curve, q=args.q, n=tower, m=args.m)
    return _Curve(cc.curve, cc.describe(), cc.distinguished, cc.notes, cc)


def _tuple_arg(args) -> list[int]:
    if args.tuple is not None:
        return _int_list(args.tuple)
    if getattr(args, "curve", None) in TOWER_CURVES and not getattr(args, "curve_file", None):
        raise UsageError(f"curve {args.curve} uses --n as tower exponent; pass the tuple with --tuple")
    if args.n is None:
        raise UsageError("missing tuple (--n or --tuple)")
    return _int_list(args.n)


def _places_arg(cv: _Curve, args, count: int | None = None):
    if not args.places:
        if count is None:
            raise UsageError("missing --places")
        defaults = ["P1", "P2"][:count] if count <= 2 else None
        if not defaults or not cv.named:
            raise UsageError("missing --places")
        return [cv.named[p] for p in defaults]
    return [parse_place(cv.curve, p, cv.named) for p in args.places.split(",")]


def _emit(args, curve_name, result, warnings, text_lines) -> None:
    if getattr(args, "json", False):
        envelope = {
            "command": args.argv,
            "curve": curve_name,
            "result": result,
            "warnings": list(warnings),
        }
        print(json.dumps(envelope, sort_keys=True))
    else:
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
        for line in text_lines:
            print(line)


def cmd_curve(args) -> int:
    cv = _load_curve(args)
    if args.action == "export":
        print(json.dumps(curve_to_json(cv.curve), sort_keys=True))
        return 0
    report = validate_curve(cv.curve)
    info = {
        "m": cv.curve.m,
        "char_p": cv.curve.char_p,
        "genus": genus(cv.curve) if report.ok else None,
        "valid": report.ok,
        "problems": list(report.problems),
        "r": cv.curve.r,
        "s": cv.curve.s,
        "classes": [
            {
                "index": i,
                "label": c.label,
                "lambda": c.lam,
                "count": c.count,
                "gcd": cv.curve.class_gcd(i),
                "totally_ramified": cv.curve.is_totally_ramified(i),
            }
            for i, c in enumerate(cv.curve.classes)
        ],
        "places": {k: list(v) for k, v in cv.named.items()},
    }
    cc = cv.catalog_curve
    if cc is not None:
        info["rational_places"] = cc.rational_places
        info["genus_formula"] = cc.genus_formula_value
    lines = [f"{cv.name}: m={info['m']} p={info['char_p']} genus={info['genus']}"]
    if "rational_places" in info:
        lines.append(f"rational places N = {info['rational_places']}")
    lines.append("index\tlabel\tlambda\tcount\tgcd\ttotally_ramified")
    for c in info["classes"]:
        lines.append(f"{c['index']}\t{c['label']}\t{c['lambda']}\t{c['count']}\t{c['gcd']}\t{c['totally_ramified']}")
    lines.extend(f"problem: {p}" for p in report.problems)
    _emit(args, cv.name, info, cv.notes, lines)
    return 0 if report.ok else 2


def cmd_dim(args) -> int:
    cv = _load_curve(args)
    coeffs = _tuple_arg(args)
    places = _places_arg(cv, args)
    if len(places) != len(coeffs):
        raise UsageError("--places and the tuple differ in length")
    if len(set(places)) != len(places):
        raise UsageError("places must be distinct")
    dim = rr_dim(cv.curve, dict(zip(places, coeffs)))
    _emit(args, cv.name, {"places": [list(p) for p in places], "coefficients": coeffs, "dim": dim}, cv.notes, [str(dim)])
    return 0


def cmd_gap(args) -> int:
    cv = _load_curve(args)
    n = _tuple_arg(args)
    if args.c is None:
        raise UsageError("missing --c")
    c = _int_list(args.c)
    places = _places_arg(cv, args, len(n))
    query = CGapQuery(tuple(places), tuple(n), tuple(c))
    result = {"places": [list(p) for p in places], "n": n, "c": c}
    status = 0
    if args.oracle:
        answer = is_c_gap_by_def(cv.curve, query)
    else:
        answer = is_c_gap_criterion(cv.curve, query)
    if args.check_both:
        other = is_c_gap_by_def(cv.curve, query) if not args.oracle else is_c_gap_criterion(cv.curve, query)
        result["agree"] = other == answer
        if other != answer:
            status = 1
    result["c_gap"] = answer
    _emit(args, cv.name, result, cv.notes, ["true" if answer else "false"])
    return status


def cmd_gaps(args) -> int:
    cv = _load_curve(args)
    places = _places_arg(cv, args, 1)
    out = {}
    lines = []
    for p in places:
        gaps = gaps_at_place(cv.curve, p)
        out[f"{p[0]}:{p[1]}"] = gaps
        lines.append(f"{p[0]}:{p[1]}\t" + ",".join(map(str, gaps)))
    _emit(args, cv.name, out, cv.notes, lines)
    return 0


def cmd_puregaps(args) -> int:
    cv = _load_curve(args)
    places = _places_arg(cv, args, 2)
    box = _int_list(args.box) if args.box else None
    found = iter_pure_gaps(cv.curve, places, box)
    if args.json:
        # buffered: the envelope needs the full list
        result = {"places": [list(p) for p in places], "pure_gaps": [list(t) for t in found]}
        _emit(args, cv.name, result, cv.notes, [])
    else:
        for w in cv.notes:
            print(f"warning: {w}", file=sys.stderr)
        print("\t".join(f"n{i + 1}" for i in range(len(places))))
        for t in found:
            print("\t".join(map(str, t)))
    return 0


def cmd_verify(args) -> int:
    report = families.verify_family(args.family, args.q, args.n)
    if args.json:
        _emit(args, report.curve, report.as_dict(), report.notes, [])
    else:
        for w in report.notes:
            print(f"warning: {w}", file=sys.stderr)
        print(f"{report.family} on {report.curve}")
        print("params\tn\tc\tclaim\tcriterion\toracle\tpass")
        for r in report.results:
            i = r.instance
            params = ",".join(f"{k}={v}" for k, v in i.params.items()) or "-"
            print(f"{params}\t{i.n}\t{i.c}\t{i.claim}\t{r.criterion_result}\t{r.oracle_result}\t{r.passed}")
        print(f"{report.passed}/{len(report.results)} pass")
    if report.asserted and not report.ok:
        return 1
    return 0


def cmd_suzuki(args) -> int:
    q0 = args.q0
    prof = suzuki.semigroup_gaps(q0)
    name = f"Suzuki(q0={q0})"
    action = args.action
    if action == "gaps":
        result = {"q": prof.q, "g": prof.g, "generators": list(prof.generators), "gaps": list(prof.gap_set)}
        lines = [",".join(map(str, prof.gap_set))]
    elif action == "beta":
        if args.value is None:
            raise UsageError("suzuki beta needs a gap value")
        dec = suzuki.decompose(args.value, q0)
        b = suzuki.beta(args.value, q0)
        result = {"n": dec.n, "r": dec.r, "m": dec.m, "s": dec.s, "j": dec.j, "beta": b}
        lines = [str(b)]
    elif action in ("puregaps", "classify"):
        pairs = suzuki.pure_gaps_suzuki(q0) if action == "puregaps" else suzuki.prop43_classify(q0)
        pairs = sorted(pairs)
        result = {"pairs": [list(p) for p in pairs]}
        if action == "classify":
            result["equals_prop41_family"] = set(pairs) == suzuki.prop41_family(q0)
        lines = ["n1\tn2"] + [f"{a}\t{b}" for a, b in pairs]
    elif action == "maxsum":
        value = suzuki.max_pure_gap_sum(q0)
        result = {"max_sum": value, "two_g_minus_q": 2 * prof.g - prof.q}
        lines = [str(value)]
    else:
        raise UsageError(f"unknown suzuki action {action!r}")
    _emit(args, name, result, [], lines)
    return 0


def cmd_code(args) -> int:
    gap = _int_list(args.gap)
    if len(gap) != 2:
        raise UsageError("--gap needs two integers")
    if args.curve == "suzuki":
        if args.q0 is None:
            raise UsageError("suzuki needs --q0")
        design = codes.design_for_suzuki(args.q0, gap)
        name, notes = f"Suzuki(q0={args.q0})", []
    else:
        cv = _load_curve(args)
        cc = cv.catalog_curve
        places = _places_arg(cv, args, 2)
        design = codes.design_for_curve(cc, gap, places)
        name, notes = cc.describe(), cc.notes
    result = {"n": design.n, "k": design.k, "degG": design.degG, "d_bound": design.d_bound,
              "g": design.g, "N": design.N, "gap": gap}
    args.json = True
    _emit(args, name, result, notes, [])
    return 0


def cmd_table1(args) -> int:
    report = codes.table1_audit(args.row, q=args.q, n=args.n, q0=args.q0, alpha=args.alpha)
    warnings = list(report.notes)
    for col, entry in report.columns.items():
        if entry["status"] != "match":
            warnings.append(f"{col}: {entry['status']}(printed={entry['printed']}, identity={entry['identity']})")
    if args.json:
        _emit(args, args.row, report.as_dict(), warnings, [])
    else:
        print(f"printed table row {args.row} {report.params} from pure gap {report.gap}")
        print("column\tstatus\tprinted\tidentity")
        for col, e in report.columns.items():
            print(f"{col}\t{e['status']}\t{e['printed']}\t{e['identity']}")
        for note in report.notes:
            print(f"note: {note}")
    return 0


def _curve_options(p: argparse.ArgumentParser, tuple_opts: bool = True) -> None:
    p.add_argument("--curve", choices=("gk", "x1", "x2", "ggs"))
    p.add_argument("--curve-file", help="curve-spec JSON {m, char_p, classes: [{label, lambda, count}]}")
    p.add_argument("--q", type=int)
    p.add_argument("--n", help="tower exponent (x1, ggs) or the tuple (other curves)")
    p.add_argument("--m", type=int)
    p.add_argument("--places", help="comma-separated place selectors")
    if tuple_opts:
        p.add_argument("--tuple", help="comma-separated tuple")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummergaps",
        description="Weierstrass gaps, c-gaps and pure gaps on Kummer covers and the Suzuki curve.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="describe or export a curve")
    p.add_argument("action", choices=("info", "export"))
    _curve_options(p, tuple_opts=False)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("dim", help="Riemann-Roch dimension of sum n_i P_i")
    _curve_options(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("gap", help="c-gap query")
    _curve_options(p)
    p.add_argument("--c", help="comma-separated c tuple")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true", help="compare dimensions directly")
    mode.add_argument("--check-both", action="store_true", help="run both routes; exit 1 if they disagree")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("gaps", help="one-point gaps at each selected place")
    _curve_options(p)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("puregaps", help="enumerate pure gaps in a box (TSV or --json)")
    _curve_options(p)
    p.add_argument("--box", help="per-coordinate upper bounds; default 2g-1 each")
    p.set_defaults(func=cmd_puregaps)

    p = sub.add_parser("verify", help="verify a gap family over its full parameter range")
    p.add_argument("family", choices=families.FAMILIES)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suzuki", help="Suzuki curve two-point gaps")
    p.add_argument("--q0", type=int, required=True)
    p.add_argument("action", choices=("gaps", "beta", "puregaps", "maxsum", "classify"))
    p.add_argument("value", nargs="?", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_suzuki)

    p = sub.add_parser("code", help="two-point code parameters from a pure gap (JSON)")
    p.add_argument("--curve", choices=("gk", "x1", "x2", "ggs", "suzuki"), required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--n", help="tower exponent (x1, ggs)")
    p.add_argument("--m", type=int)
    p.add_argument("--q0", type=int)
    p.add_argument("--places")
    p.add_argument("--gap", required=True)
    p.set_defaults(func=cmd_code, tuple=None)

    p = sub.add_parser("table1", help="audit a row of the printed code-parameter table")
    p.add_argument("--row", choices=codes.TABLE1_ROWS, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q0", type=int)
    p.add_argument("--alpha", type=int, default=1, help="alpha (1 or 2) selecting the x1 row's pure gap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.argv = argv
    try:
        return args.func(args)
    except (UsageError, CurveError, QueryError, families.FamilyRangeError,
            suzuki.SuzukiError, codes.DesignError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
