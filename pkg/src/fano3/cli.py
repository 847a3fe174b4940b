"""``fano3`` command line.

Exit codes: 0 success, 1 a mathematical inconsistency was detected,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog, enumeration, quadrics, rationality
from .chow import CISpec, euler_ci, euler_closed_form
from .expr import ExprSyntaxError, parse_divisor

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _divisors(text: str) -> list[tuple[int, int]]:
    out = []
    for part in text.split(","):
        try:
            out.append(parse_divisor(part))
        except ExprSyntaxError as e:
            raise UsageError(f"parse error: {e}") from None
        except ValueError as e:
            raise UsageError(str(e)) from None
    return out


def _build_ci(args) -> CISpec:
    twists = _int_list(args.bundle)
    if not twists:
        raise UsageError("--bundle needs at least one twist")
    try:
        return CISpec.build(twists, _divisors(args.divisors) if args.divisors else [])
    except ValueError as e:
        raise UsageError(str(e)) from None


def _is_dp4_shape(ci: CISpec) -> bool:
    return ci.ambient.rank == 5 and len(ci.divisors) == 2 and all(m == 2 for m, _ in ci.divisors)


def cmd_euler(args) -> int:
    ci = _build_ci(args)
    try:
        eu = euler_ci(ci)
    except ValueError as e:
        raise UsageError(str(e)) from None
    closed = None
    if _is_dp4_shape(ci):
        closed = euler_closed_form(sum(ci.ambient.twists), sum(f for _, f in ci.divisors))
    agrees = closed is None or closed == eu
    if args.json:
        _emit({"schema": catalog.SCHEMA, "model": ci.to_json(), "euler": eu, "closed_form": closed,
               "agrees": agrees})
    elif closed is None:
        print(f"Eu={eu}")
    elif agrees:
        print(f"Eu={eu} (closed form agrees)")
    else:
        print(f"Eu={eu} (closed form gives {closed}: MISMATCH)")
    return EXIT_OK if agrees else EXIT_INCONSISTENT


def _link_line(r: enumeration.LinkRecord) -> str:
    row = "-" if r.row is None else str(r.row)
    right = "?" if r.right is None else str(r.right)
    nodes = "?" if r.nodes is None else str(r.nodes)
    return f"{row:>3}  g={r.genus:<2}  {str(r.left):<36} {right:<36} #{nodes:<3} {r.nonrational or '?'}"


def cmd_links(args) -> int:
    try:
        recs = enumeration.enumerate_all_links() if args.all else enumeration.enumerate_links(args.genus)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.json:
        _emit({"schema": catalog.SCHEMA, "links": [r.to_json() for r in recs]})
    else:
        for r in recs:
            print(_link_line(r))
        print(f"{len(recs)} link(s)")
    unmatched = [r for r in recs if r.row is None]
    return EXIT_INCONSISTENT if unmatched else EXIT_OK


def cmd_catalog(args) -> int:
    rows = catalog.CATALOG if args.row is None else (catalog.catalog_row(args.row),)
    if args.json:
        _emit({"schema": catalog.SCHEMA, "rows": [r.to_json() for r in rows]})
        return EXIT_OK
    for r in rows:
        kind = "symmetric" if r.symmetric else "non-symmetric"
        print(f"{r.row:>3}  g={r.genus:<2}  #{r.nodes:<3} {r.nonrational:<8} {kind}")
        print(f"       {r.left_desc}  |  {r.right_desc}")
    return EXIT_OK


def cmd_effcone(args) -> int:
    sols = enumeration.eff_cone_solve(args.gmax)
    g7 = enumeration.check_g7()
    if args.json:
        _emit({"schema": catalog.SCHEMA, "solutions": [s.to_json() for s in sols],
               "g7_check": {"S3^2.S1": str(g7.values[0]), "S3^2.S2": str(g7.values[1]), "verdict": g7.verdict}})
        return EXIT_OK
    for s in sols:
        degs = ",".join(map(str, s.degrees))
        cs = ",".join(map(str, s.c_seq))
        print(f"g={s.g} r={s.r} degrees=[{degs}] c=[{cs}]  {s.status}")
    print(f"g=7 check: S3^2.S1={g7.values[0]} S3^2.S2={g7.values[1]} -> {g7.verdict}")
    return EXIT_OK


def cmd_castelnuovo(args) -> int:
    try:
        value = enumeration.castelnuovo(args.m, args.r)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.json:
        _emit({"schema": catalog.SCHEMA, "m": args.m, "r": args.r, "bound": value})
    else:
        print(value)
    return EXIT_OK


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}") from None


def cmd_quadrics(args) -> int:
    try:
        if args.what == "nodes":
            return _quadrics_nodes(args)
        return _quadrics_skew(args)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(str(e)) from None


def _quadrics_nodes(args) -> int:
    if args.file:
        data = _load_json(args.file)
        q1, q2, q3 = (quadrics.QuadraticForm.from_json(data[k]) for k in ("Q1", "Q2", "Q3"))
        two = args.two or quadrics.corank(q2)[0] == 3
    else:
        two = args.two
        gen = quadrics.random_two_corank3_net if two else quadrics.random_corank3_net
        q1, q2, q3, _ = gen(args.seed)
    if two:
        res = quadrics.nodes_two_corank3(q1, q2, q3, args.seed)
        if args.json:
            _emit(res.to_json())
        else:
            print(f"nodes={res.count} shared={res.shared} certified={str(res.all_nodes_certified).lower()}")
        return EXIT_OK
    rep = quadrics.nodes_on_vertex_plane(q1, q2, q3, args.seed)
    if args.json:
        _emit(rep.to_json())
    else:
        mults = ",".join(map(str, rep.multiplicities))
        print(f"nodes={rep.distinct} multiplicities=[{mults}] total={rep.total_multiplicity} "
              f"certified={str(rep.all_nodes_certified).lower()}")
    return EXIT_OK if rep.total_multiplicity == 4 else EXIT_INCONSISTENT


def _quadrics_skew(args) -> int:
    if args.file:
        pencil = quadrics.SkewPencil.from_json(_load_json(args.file))
    else:
        pencil = quadrics.skew_pencil_instance(args.case, args.seed)
    rep = quadrics.skew_pencil_classify(pencil)
    if args.json:
        _emit(rep.to_json())
    else:
        extra = "" if rep.kernel_intersection_dim is None else f" kernel_meet={rep.kernel_intersection_dim}"
        print(f"{rep.label} (rank-2 members: {rep.rank2_members}){extra}")
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        if args.model == "ci":
            v = rationality.classify_ci_model(_build_ci(args))
        elif args.model == "conic":
            if args.base == "quadric":
                deg = tuple(_int_list(args.degree))
                if len(deg) != 2:
                    raise UsageError("quadric base needs a bidegree n1,n2")
                base = rationality.Base.QUADRIC
            else:
                deg = int(args.degree)
                base = rationality.Base.PLANE
            data = rationality.ConicBundleData(base, deg, not args.nonstandard,
                                               rationality.Parity(args.theta.capitalize()))
            v = rationality.conic_bundle_verdict(data)
        else:
            v = rationality.dp_fibration_verdict(
                rationality.DPFibrationData(args.degree, args.euler, not args.not_smooth))
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.json:
        _emit(v.to_json())
    else:
        print(f"{v.status.value} [{v.rule}] {v.citation}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fano3", description="Numerical toolkit for Fano threefold links.")
    sub = p.add_subparsers(dest="command", required=True)

    def json_flag(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("euler", help="Euler number of a complete intersection in a P^4-bundle over P^1")
    sp.add_argument("--bundle", required=True, help="twists a0,...,a4")
    sp.add_argument("--divisors", default="", help="comma-separated classes such as 2M,2M-F")
    json_flag(sp)
    sp.set_defaults(func=cmd_euler)

    sp = sub.add_parser("links", help="enumerate links")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--genus", type=int)
    g.add_argument("--all", action="store_true")
    json_flag(sp)
    sp.set_defaults(func=cmd_links)

    sp = sub.add_parser("catalog", help="print the embedded table")
    sp.add_argument("--row", type=int, choices=range(1, 13), metavar="ROW")
    json_flag(sp)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("effcone", help="rank-three effective cone sequences")
    sp.add_argument("--gmax", type=int, default=enumeration.DEFAULT_BOUND)
    json_flag(sp)
    sp.set_defaults(func=cmd_effcone)

    sp = sub.add_parser("castelnuovo", help="Castelnuovo bound pi(m, r)")
    sp.add_argument("m", type=int)
    sp.add_argument("r", type=int)
    json_flag(sp)
    sp.set_defaults(func=cmd_castelnuovo)

    sp = sub.add_parser("quadrics", help="node counts and skew pencils")
    sp.add_argument("what", choices=("nodes", "skew"))
    sp.add_argument("file", nargs="?", help="JSON input; a seeded random instance is used if omitted")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--two", action="store_true", help="two corank-3 forms (8-node model)")
    sp.add_argument("--case", type=int, choices=(1, 2, 3), default=1, help="constructed skew pencil case")
    json_flag(sp)
    sp.set_defaults(func=cmd_quadrics)

    sp = sub.add_parser("classify", help="rationality verdicts")
    csub = sp.add_subparsers(dest="model", required=True)
    c = csub.add_parser("ci", help="complete intersection dP4 model")
    c.add_argument("--bundle", required=True)
    c.add_argument("--divisors", required=True)
    json_flag(c)
    c = csub.add_parser("conic", help="conic bundle")
    c.add_argument("--base", choices=("plane", "quadric"), default="plane")
    c.add_argument("--degree", required=True, help="deg(Delta), or n1,n2 over a quadric")
    c.add_argument("--theta", choices=("odd", "even", "unknown"), default="unknown")
    c.add_argument("--nonstandard", action="store_true")
    json_flag(c)
    c = csub.add_parser("dp", help="del Pezzo fibration")
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--euler", type=int)
    c.add_argument("--not-smooth", action="store_true")
    json_flag(c)
    sp.set_defaults(func=cmd_classify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, AssertionError) as e:
        print(f"inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
