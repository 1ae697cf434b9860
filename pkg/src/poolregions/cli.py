"""Command-line surface: machine-readable counts and the verification suite.

Every command prints a single JSON object by default (big integers as
decimal strings, polynomials as coefficient-string lists) and exits 0 on
success, 2 on invalid parameters, 3 on budget exhaustion, 4 on a
verification failure.  `--format csv` emits key,value lines (or the table
layout for `tables`).  Output is byte-stable for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, facets1d, oracle, seq1d, seq2d, verify
from .errors import (
    BudgetExceededError,
    InvalidParamsError,
    PoolRegionsError,
    RegimeNotCoveredError,
    VerificationError,
)
from .model import windows_1d, windows_3xn
from .polyalg import RationalGF

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


def _poly_strings(p):
    return [str(c) for c in p]


def _gf_json(gf: RationalGF):
    return {"num": _poly_strings(gf.num), "den": _poly_strings(gf.den)}


def _emit(args, command, params, result, provenance):
    payload = {
        "command": command,
        "params": params,
        "result": result,
        "provenance": provenance,
        "version": __version__,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        _emit_csv(payload)


def _emit_csv(payload):
    def flat(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                yield from flat(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(value, list):
            yield prefix, ";".join(str(x) for x in value)
        else:
            yield prefix, value

    print("key,value")
    for key, value in flat("result", payload["result"]):
        print(f"{key},{value}")
    print(f"provenance,{';'.join(payload['provenance'])}")


def _family(args):
    if getattr(args, "grid3xn", None) is not None:
        return windows_3xn(args.grid3xn), {"grid3xn": args.grid3xn}
    if args.k is None or args.s is None or args.n is None:
        raise InvalidParamsError("need --k/--s/--n or --grid3xn")
    return windows_1d(args.n, args.k, args.s), {"n": args.n, "k": args.k, "s": args.s}


def _cmd_vertices(args):
    params = {"n": args.n, "k": args.k, "s": args.s}
    if args.method:
        value = seq1d.count_1d(args.n, args.k, args.s, args.method, budget=args.budget)
        _emit(args, "vertices", params, str(value), [args.method])
        return EXIT_OK
    methods = ["matrix", "gf"]
    values = {m: seq1d.count_1d(args.n, args.k, args.s, m) for m in methods}
    try:
        values["closed"] = seq1d.count_1d(args.n, args.k, args.s, "closed")
    except RegimeNotCoveredError:
        pass
    if len(set(values.values())) != 1:
        print(json.dumps({"error": "method disagreement", "values": {m: str(v) for m, v in values.items()}}))
        return EXIT_VERIFY
    _emit(args, "vertices", params, str(values["matrix"]), sorted(values))
    return EXIT_OK


def _cmd_gf(args):
    params = {"k": args.k, "s": args.s}
    if args.closed:
        closed = seq1d.gf_closed(args.k, args.s)
        result = {"gf": _gf_json(closed.gf), "series_form": "1 + sum b_n x^n"}
        _emit(args, "gf", params, result, list(closed.regimes))
        return EXIT_OK
    g = seq1d.gf_1d(args.k, args.s)
    result = {"gf": _gf_json(g), "series_form": "sum b_(n+1) x^n"}
    _emit(args, "gf", params, result, ["matrix"])
    return EXIT_OK


def _cmd_fvector(args):
    fam, params = _family(args)
    fv = oracle.enumerate_faces(fam, budget=args.budget)
    result = {
        "counts": {str(dim): str(c) for dim, c in sorted(fv.counts.items())},
        "polytope_dim": fv.polytope_dim,
        "total_nonempty": str(fv.total()),
    }
    _emit(args, "fvector", params, result, ["oracle"])
    return EXIT_OK


def _cmd_total_faces(args):
    fam, params = _family(args)
    _emit(args, "total-faces", params, str(oracle.total_face_count(fam, budget=args.budget)), ["oracle"])
    return EXIT_OK


def _cmd_facets(args):
    params = {"n": args.n, "k": args.k, "s": args.s}
    if args.paper_literal:
        fam = windows_1d(args.n, args.k, args.s)
        report = facets1d.printed_description_diff(
            args.n, args.k, args.s, oracle.enumerate_vertices(fam, budget=args.budget)
        )
        _emit(args, "facets", params, report, ["oracle", "derived"])
        return EXIT_OK
    result = {"count": str(facets1d.facet_count_formula(args.n, args.k, args.s))}
    provenance = ["formula"]
    if args.hrep:
        rep = facets1d.h_representation(args.n, args.k, args.s)
        result["hrep"] = [
            {"coeffs": list(r.coeffs), "rhs": r.rhs, "sense": r.sense, "label": r.label}
            for r in rep.rows()
        ]
        provenance.append("derived-hrep")
    if args.oracle:
        fam = windows_1d(args.n, args.k, args.s)
        got = oracle.facet_count_oracle(fam, budget=args.budget)
        if str(got) != result["count"]:
            print(json.dumps({"error": "facet count mismatch", "formula": result["count"], "oracle": str(got)}))
            return EXIT_VERIFY
        provenance.append("oracle")
    _emit(args, "facets", params, result, provenance)
    return EXIT_OK


def _cmd_growth(args):
    if args.grid3xn:
        value = seq2d.growth_2d()
        _emit(args, "growth", {"grid3xn": True}, repr(value), ["matrix-root"])
        return EXIT_OK
    if args.k is None or args.s is None:
        raise InvalidParamsError("growth needs --k/--s or --grid3xn")
    params = {"k": args.k, "s": args.s}
    value = seq1d.growth_1d(args.k, args.s)
    provenance = ["matrix-root"]
    if args.large_strides:
        closed = seq1d.growth_large_strides(args.k, args.s)
        provenance.append("closed-form")
        if abs(closed - value) > 1e-9:
            print(json.dumps({
                "error": "closed growth disagrees with matrix growth",
                "matrix": repr(value), "closed": repr(closed),
            }))
            return EXIT_VERIFY
    _emit(args, "growth", params, repr(value), provenance)
    return EXIT_OK


def _cmd_grid3xn(args):
    params = {"n": args.n, "method": args.method or "all"}
    if args.class_counts:
        cc = seq2d.class_counts(args.n, budget=args.budget)
        result = {"class_counts": [str(c) for c in cc.counts], "total": str(cc.total())}
        _emit(args, "grid3xn", params, result, ["oracle"])
        return EXIT_OK
    if args.method:
        value = seq2d.count_2d(args.n, args.method, budget=args.budget)
        _emit(args, "grid3xn", params, str(value), [args.method])
        return EXIT_OK
    values = {m: seq2d.count_2d(args.n, m) for m in ("b6", "gf")}
    if args.n <= 4:
        values["oracle"] = seq2d.count_2d(args.n, "oracle", budget=args.budget)
    if args.n <= 3:
        values["a14"] = seq2d.count_2d(args.n, "a14")
    if len(set(values.values())) != 1:
        print(json.dumps({"error": "method disagreement", "values": {m: str(v) for m, v in values.items()}}))
        return EXIT_VERIFY
    _emit(args, "grid3xn", params, str(values["b6"]), sorted(values))
    return EXIT_OK


def _cmd_grid2xn(args):
    _emit(args, "grid2xn", {"n": args.n}, str(seq2d.count_2xn(args.n)), ["matrix", "gf"])
    return EXIT_OK


def _cmd_regions(args):
    fam, params = _family(args)
    params.update({"sample": args.sample, "seed": args.seed})
    distinct, all_faces = oracle.sample_regions(fam, args.sample, args.seed)
    result = {"distinct": str(distinct), "all_faces": all_faces}
    _emit(args, "regions", params, result, ["sampling"])
    return EXIT_OK


def _cmd_tables(args):
    kind = args.kind
    table = verify.EDGES_TABLE if kind == "edges" else verify.TOTAL_FACES_TABLE
    nmax = args.nmax
    rows = []
    for k in range(3, 7):
        row = [str(k)]
        for n in range(1, nmax + 1):
            fv = oracle.enumerate_faces(windows_1d(n, k, 1), budget=args.budget)
            value = fv.counts.get(1, 0) if kind == "edges" else fv.total() + 1
            if value != table[k][n - 1]:
                print(json.dumps({"error": f"table mismatch at (k={k},n={n})",
                                  "computed": str(value), "expected": str(table[k][n - 1])}))
                return EXIT_VERIFY
            row.append(str(value))
        rows.append(row)
    if args.format == "csv":
        print("k\\n," + ",".join(str(n) for n in range(1, nmax + 1)))
        for row in rows:
            print(",".join(row))
    else:
        _emit(args, "tables", {"kind": kind, "nmax": nmax},
              {row[0]: row[1:] for row in rows}, ["oracle"])
    return EXIT_OK


def _cmd_verify(args):
    report = verify.run_suite(args.level, include_q5_enumeration=args.include_q5_enumeration)
    if args.format == "json":
        print(json.dumps(report))
    else:
        for check in report["checks"]:
            print(f"{'PASS' if check['ok'] else 'FAIL'},{check['name']},{check['detail']}")
    return EXIT_OK if report["ok"] else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poolregions",
        description="Exact counts of max-pooling linearity regions and the faces of their polytopes.",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                        help="candidate budget for oracle enumerations")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ks(p, with_n=True):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        if with_n:
            p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("vertices", help="1-D vertex count b_n")
    add_ks(p)
    p.add_argument("--method", choices=seq1d.COUNT_METHODS)
    p.set_defaults(func=_cmd_vertices)

    p = sub.add_parser("gf", help="1-D generating function")
    add_ks(p, with_n=False)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--matrix", action="store_true", help="transfer-matrix form (default)")
    g.add_argument("--closed", action="store_true", help="closed form, when covered")
    p.set_defaults(func=_cmd_gf)

    def add_family(p):
        p.add_argument("--k", type=int)
        p.add_argument("--s", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--grid3xn", type=int, metavar="N",
                       help="use the 3-row grid with N columns instead of --k/--s/--n")

    p = sub.add_parser("fvector", help="face counts by dimension (oracle)")
    add_family(p)
    p.set_defaults(func=_cmd_fvector)

    p = sub.add_parser("total-faces", help="total face count incl. the empty face")
    add_family(p)
    p.set_defaults(func=_cmd_total_faces)

    p = sub.add_parser("facets", help="1-D facet count / H-representation")
    add_ks(p)
    p.add_argument("--hrep", action="store_true", help="emit the inequality description")
    p.add_argument("--oracle", action="store_true", help="cross-check against face enumeration")
    p.add_argument("--paper-literal", action="store_true",
                   help="diff report for the uncorrected published description")
    p.set_defaults(func=_cmd_facets)

    p = sub.add_parser("growth", help="exponential growth rate of vertex counts")
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--grid3xn", action="store_true", help="3-row grid instead of 1-D")
    p.add_argument("--large-strides", action="store_true",
                   help="cross-check the closed large-strides formula")
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("grid3xn", help="vertex counts V_n of the 3-row grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=seq2d.COUNT_METHODS)
    p.add_argument("--class-counts", action="store_true",
                   help="per-class vertex counts (oracle, n <= 4)")
    p.set_defaults(func=_cmd_grid3xn)

    p = sub.add_parser("grid2xn", help="vertex counts of the 2-row grid")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_grid2xn)

    p = sub.add_parser("regions", help="sample gradient regions of the pooling map")
    add_family(p)
    p.add_argument("--sample", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_regions)

    p = sub.add_parser("tables", help="reproduce the golden edge/total-face tables")
    p.add_argument("--kind", choices=("edges", "total"), required=True)
    p.add_argument("--nmax", type=int, default=4, choices=range(1, 6))
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--include-q5-enumeration", action="store_true",
                   help="also run the full 3x5 face enumeration (minutes)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(json.dumps({"error": "budget-exceeded", "detail": str(exc)}))
        return EXIT_BUDGET
    except VerificationError as exc:
        print(json.dumps({"error": "verification-failure", "detail": str(exc)}))
        return EXIT_VERIFY
    except (InvalidParamsError, RegimeNotCoveredError, PoolRegionsError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
