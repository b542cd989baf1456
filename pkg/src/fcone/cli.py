"""Command-line front end.

Subcommands: ``class`` builds cover classes, ``pair`` evaluates divisors
against curves, ``fnef`` and ``extremal`` report positivity and ray
certificates, ``rays`` enumerates the F-cone, ``table`` regenerates the
canonical CSV tables, and ``eigenrank`` tabulates eigenbundle ranks and
degrees.  Exit codes: 0 success or affirmative verdict, 1 mathematical
negative (not F-nef, not extremal), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .covers import (
    WeightData,
    conformal_blocks_class,
    eigen_det_class,
    hodge_class,
    log_canonical_class,
    p5_class,
    pullback_boundary,
    pullback_combo,
    weighted_pullbacks,
)
from .eigenforms import eigen_rank_degree_fcurve
from .exactlin import parse_rational, primitive, rank
from .moduli import (
    SymFCurve,
    enumerate_sym_fcurves,
    fcurve_class_vector,
    format_divisor,
    parse_divisor,
    psi_expand,
    sym_divisor_from_vector,
    sym_pairing,
    symmetrize,
    tk_pairing,
)
from .tables import ray_annotations, fcone_rays, table_csv, TABLE_NAMES


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"weights must be a comma-separated integer list, got {text!r}")


def _parse_parts(text: str) -> tuple[int, int, int, int]:
    parts = _parse_weights(text)
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated parts, got {text!r}")
    return parts


def _print_class(div, args) -> int:
    expanded = psi_expand(div)
    vector = expanded.class_vector()
    prop = None
    if any(vector):
        prim = primitive(vector)
        if tuple(vector) != tuple(map(Fraction, prim)):
            prop = prim
    if args.json:
        payload = {
            "n": div.n,
            "literal": format_divisor(div),
            "expanded": format_divisor(expanded),
            "vector": [str(x) for x in vector],
            "proportional": list(prop) if prop else None,
        }
        print(json.dumps(payload))
        return 0
    if args.expand:
        print(format_divisor(expanded))
        if prop:
            print("proportional to " + format_divisor(sym_divisor_from_vector(div.n, prop)))
    else:
        print(format_divisor(div))
    return 0


def cmd_class(args) -> int:
    kind = args.kind
    if kind == "hodge":
        div = hodge_class(args.n, args.p)
    elif kind == "boundary":
        irr, red = pullback_boundary(args.n, args.p)
        div = irr if args.part == "irr" else red
    elif kind == "combo":
        div = pullback_combo(args.n, args.p, args.c_lambda, args.c_irr, args.c_red)
    elif kind == "p5":
        div = p5_class(args.n, args.j)
    elif kind == "logcanonical":
        div = log_canonical_class(args.n, args.p)
    elif kind == "weighted":
        w = WeightData(_parse_weights(args.weights), args.p)
        full = weighted_pullbacks(w)[("lambda", "irr", "red").index(args.part_w)]
        div = symmetrize(full)
    elif kind == "eigen":
        w = WeightData(_parse_weights(args.weights), args.p)
        div = symmetrize(eigen_det_class(w, args.j))
    elif kind == "cb":
        div = symmetrize(conformal_blocks_class(args.p, _parse_weights(args.weights)))
    else:
        raise ValueError(f"unknown class kind {kind!r}")
    return _print_class(div, args)


def cmd_pair(args) -> int:
    div = parse_divisor(args.divisor, args.n)
    if args.curve is not None:
        f = SymFCurve(_parse_parts(args.curve))
        if f.n != args.n:
            raise ValueError(f"curve parts sum to {f.n}, expected {args.n}")
        print(sym_pairing(div, f))
        return 0
    if args.tk is not None:
        print(tk_pairing(div, args.tk))
        return 0
    for f in enumerate_sym_fcurves(args.n):
        print(f"{f} {sym_pairing(div, f)}")
    return 0


def cmd_fnef(args) -> int:
    div = parse_divisor(args.divisor, args.n)
    zero, negative = [], []
    for f in enumerate_sym_fcurves(args.n):
        deg = sym_pairing(div, f)
        if deg == 0:
            zero.append(f)
        elif deg < 0:
            negative.append((f, deg))
    print("F-nef" if not negative else "not F-nef")
    for f in zero:
        print(f"zero: {f}")
    for f, deg in negative:
        print(f"negative: {f} = {deg}")
    return 0 if not negative else 1


def cmd_extremal(args) -> int:
    div = parse_divisor(args.divisor, args.n)
    orthogonal, negative = [], []
    for f in enumerate_sym_fcurves(args.n):
        deg = sym_pairing(div, f)
        if deg == 0:
            orthogonal.append(f)
        elif deg < 0:
            negative.append((f, deg))
    if negative:
        print("not F-nef")
        for f, deg in negative:
            print(f"negative: {f} = {deg}")
        return 1
    target = args.n // 2 - 2
    vectors = [fcurve_class_vector(f) for f in orthogonal]
    span = rank(vectors) if vectors else 0
    certificate: list[SymFCurve] = []
    kept: list = []
    for f, v in zip(orthogonal, vectors):
        if rank(kept + [v]) > len(kept):
            kept.append(v)
            certificate.append(f)
    print("extremal" if span == target else "not extremal")
    print(f"rank {span} of {target}")
    for f in orthogonal:
        print(f"orthogonal: {f}")
    if certificate:
        print("certificate: " + " ".join(str(f) for f in certificate))
    return 0 if span == target else 1


def cmd_rays(args) -> int:
    if args.n < 5:
        raise ValueError(f"ray enumeration needs at least 5 markings, got {args.n}")
    basis = [f"D{k}" for k in range(2, args.n // 2 + 1)]
    if args.annotate:
        rows = ray_annotations(args.n)
    else:
        rows = [(ray, []) for ray in fcone_rays(args.n).rays]
    if args.json:
        payload = {
            "n": args.n,
            "basis": basis,
            "rays": [
                {"vector": list(ray), "annotations": labels} for ray, labels in rows
            ],
        }
        print(json.dumps(payload))
        return 0
    for ray, labels in rows:
        line = " ".join(str(x) for x in ray)
        if labels:
            line += "  " + "; ".join(labels)
        print(line)
    return 0


def cmd_table(args) -> int:
    print(table_csv(args.name, args.n), end="")
    return 0


def cmd_eigenrank(args) -> int:
    parts = _parse_parts(args.parts)
    p = args.p
    a, b, c, d = parts
    if args.j is not None:
        rk, deg = eigen_rank_degree_fcurve(a, b, c, d, p, args.j)
        print(f"{args.j} {rk} {deg}")
        return 0
    total_rank, total_deg = 0, Fraction(0)
    for j in range(p):
        rk, deg = eigen_rank_degree_fcurve(a, b, c, d, p, j)
        total_rank += rk
        total_deg += deg
        print(f"{j} {rk} {deg}")
    print(f"total {total_rank} {total_deg}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcone",
        description="Divisor classes from cyclic covers and the symmetric F-cone.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_class = sub.add_parser("class", help="build a cover class and print it")
    p_class.add_argument(
        "kind",
        choices=["hodge", "boundary", "weighted", "eigen", "cb", "combo", "p5", "logcanonical"],
    )
    p_class.add_argument("--n", type=int, help="number of markings")
    p_class.add_argument("--p", type=int, help="cover degree")
    p_class.add_argument("--j", type=int, help="character index")
    p_class.add_argument("--weights", help="comma-separated marking weights")
    p_class.add_argument("--lambda", dest="c_lambda", type=parse_rational, default=Fraction(0))
    p_class.add_argument("--irr", dest="c_irr", type=parse_rational, default=Fraction(0))
    p_class.add_argument("--red", dest="c_red", type=parse_rational, default=Fraction(0))
    p_class.add_argument("--part", choices=["irr", "red"], default="irr",
                         help="which boundary pullback to print")
    p_class.add_argument("--part-w", choices=["lambda", "irr", "red"], default="lambda",
                         help="which weighted pullback to print")
    p_class.add_argument("--expand", action="store_true", help="print in the pure-D basis")
    p_class.add_argument("--json", action="store_true")
    p_class.set_defaults(func=cmd_class)

    p_pair = sub.add_parser("pair", help="pair a divisor against curves")
    p_pair.add_argument("divisor")
    p_pair.add_argument("--n", type=int, required=True)
    p_pair.add_argument("--curve", help="four comma-separated parts")
    p_pair.add_argument("--tk", type=int, help="index of a boundary test curve")
    p_pair.set_defaults(func=cmd_pair)

    p_fnef = sub.add_parser("fnef", help="check nonnegativity on all F-curves")
    p_fnef.add_argument("divisor")
    p_fnef.add_argument("--n", type=int, required=True)
    p_fnef.set_defaults(func=cmd_fnef)

    p_ext = sub.add_parser("extremal", help="certify a divisor as an extremal ray")
    p_ext.add_argument("divisor")
    p_ext.add_argument("--n", type=int, required=True)
    p_ext.set_defaults(func=cmd_extremal)

    p_rays = sub.add_parser("rays", help="enumerate extreme rays of the F-cone")
    p_rays.add_argument("--n", type=int, required=True)
    p_rays.add_argument("--annotate", action="store_true",
                        help="label rays by matching cover classes")
    p_rays.add_argument("--json", action="store_true")
    p_rays.set_defaults(func=cmd_rays)

    p_table = sub.add_parser("table", help="print a canonical CSV table")
    p_table.add_argument("name", choices=sorted(TABLE_NAMES))
    p_table.add_argument("--n", type=int, help="markings for parameterized tables")
    p_table.set_defaults(func=cmd_table)

    p_eig = sub.add_parser("eigenrank", help="eigenbundle ranks and degrees on a curve")
    p_eig.add_argument("parts", help="four comma-separated tail weights")
    p_eig.add_argument("--p", type=int, required=True)
    p_eig.add_argument("--j", type=int, help="single character instead of the full table")
    p_eig.set_defaults(func=cmd_eigenrank)

    return parser


def _validate(args) -> None:
    if args.command == "class":
        needs_n = args.kind in ("hodge", "boundary", "combo", "p5", "logcanonical")
        if needs_n and args.n is None:
            raise ValueError(f"class {args.kind} requires --n")
        needs_p = args.kind in ("hodge", "boundary", "combo", "logcanonical",
                                "weighted", "eigen", "cb")
        if needs_p and args.p is None:
            raise ValueError(f"class {args.kind} requires --p")
        if args.kind in ("weighted", "eigen", "cb") and args.weights is None:
            raise ValueError(f"class {args.kind} requires --weights")
        if args.kind in ("eigen", "p5") and args.j is None:
            raise ValueError(f"class {args.kind} requires --j")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        _validate(args)
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
