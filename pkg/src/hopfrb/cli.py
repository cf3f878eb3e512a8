"""Command line front end: construct, verify, enumerate, and search.

Exit codes: 0 pass, 1 a verified failure (a report with a witness),
2 bad input, 3 a resource cap was hit.  All scalars in output are exact
strings; nothing is ever printed in decimal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .constructions import (FamilyParams, family, family_aut_search, family_hypotheses,
                            group_algebra, sweedler_h4, taft)
from .hopf_core import LinearMap, check_hopf
from .rb_group import (DEFAULT_CAP, CapExceeded, check_rb, check_rb_lambda, circ_from_rrb,
                       derived_group, enumerate_rb, group_from_json, lemma_checks,
                       operator_to_json, power_star)
from .rb_hopf import check_rrbo, rrb_from_json
from .rb_lie import check_lie, check_rb_lie_weight, lie_from_json
from .report import VerificationReport, merge_reports
from .scalars import parse_field, parse_scalar

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _tsv_cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _to_tsv(obj) -> str:
    if isinstance(obj, dict) and isinstance(obj.get("operators"), list):
        ops = obj["operators"]
        keys = sorted({k for row in ops for k in row}, key=lambda k: (k != "map", k))
        lines = ["\t".join(keys)]
        for row in ops:
            lines.append("\t".join(_tsv_cell(row.get(k, "")) for k in keys))
        return "\n".join(lines) + "\n"
    if isinstance(obj, dict):
        return "".join(f"{k}\t{_tsv_cell(v)}\n" for k, v in obj.items())
    return _tsv_cell(obj) + "\n"


def _emit(args, payload: dict) -> None:
    if args.format == "tsv":
        text = _to_tsv(payload)
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_exit(args, report: VerificationReport, extra: dict | None = None) -> int:
    payload = report.to_json()
    if extra:
        payload.update(extra)
    _emit(args, payload)
    return EXIT_PASS if report.ok else EXIT_FAIL


def _parse_coeffs(text: str, ctx) -> list:
    return [parse_scalar(part.strip(), ctx) for part in text.split(",")]


def _antipode_order_report(H) -> VerificationReport:
    ident = LinearMap.identity(H.ctx, H.dim)
    s2 = H.antipode.compose(H.antipode)
    s4 = s2.compose(s2)
    if s4.cols != ident.cols:
        return VerificationReport.failing(identity="antipode_order_4",
                                          witness={"identity": "S^4 = id"})
    if s2.cols == ident.cols:
        return VerificationReport.failing(identity="antipode_order_4",
                                          witness={"identity": "S^2 != id"})
    return VerificationReport.passing(identity="antipode_order_4")


def cmd_verify(args) -> int:
    ctx = parse_field(args.field)
    if args.construction == "group-algebra":
        if not args.group:
            raise ValueError("--group FILE is required for group-algebra")
        G = group_from_json(_load_json(args.group))
        H = group_algebra(G, ctx)
        return _report_exit(args, check_hopf(H), {"construction": "group-algebra",
                                                  "dim": H.dim})
    if args.construction == "h4":
        H = sweedler_h4(ctx)
        rep = merge_reports({"hopf": check_hopf(H),
                             "antipode_order_4": _antipode_order_report(H)})
        return _report_exit(args, rep, {"construction": "h4", "dim": H.dim})
    if args.construction == "taft":
        if args.m is None:
            raise ValueError("--m is required for taft")
        H = taft(args.m, ctx)
        rep = merge_reports({"hopf": check_hopf(H),
                             "hypotheses": family_hypotheses(
                                 FamilyParams(args.m, ctx.root_of_unity(args.m),
                                              args.m, None))})
        return _report_exit(args, rep, {"construction": "taft", "dim": H.dim})
    if args.construction == "family":
        if args.m is None or args.zeta is None or args.l is None:
            raise ValueError("--m, --zeta and --l are required for family")
        zeta = parse_scalar(args.zeta, ctx)
        coeffs = _parse_coeffs(args.f, ctx) if args.f is not None else None
        params = FamilyParams(args.m, zeta, args.l, coeffs)
        hyp = family_hypotheses(params)
        if not hyp.ok:
            return _report_exit(args, hyp, {"construction": "family"})
        H = family(params, ctx)
        rep = merge_reports({"hypotheses": hyp, "hopf": check_hopf(H)})
        return _report_exit(args, rep, {"construction": "family", "dim": H.dim})
    raise ValueError(f"unknown construction {args.construction!r}")


def cmd_enum_rb(args) -> int:
    G = group_from_json(_load_json(args.group))
    ops = enumerate_rb(G, args.weight, cap=args.cap, jobs=args.jobs)
    star = power_star(G, args.weight)
    rows = []
    for op in ops:
        entry = operator_to_json(G, op, args.weight)
        _, circ_rep = circ_from_rrb(G, star, op)
        entry["skew_brace"] = circ_rep.status
        if args.weight == 1:
            _, drep = derived_group(G, op)
            entry["derived_group"] = drep.status
            entry["lemma"] = lemma_checks(G, op).status
        else:
            entry["derived_group"] = circ_rep.details["circ_group"]["status"]
        rows.append(entry)
    _emit(args, {"group": G.name, "order": G.n, "weight": args.weight,
                 "count": len(rows), "operators": rows})
    return EXIT_PASS


def cmd_check_rrb(args) -> int:
    obj = _load_json(args.input)
    data = rrb_from_json(obj, base_dir=os.path.dirname(args.input) or ".")
    rep = check_rrbo(data, full=args.full)
    return _report_exit(args, rep, {"H_dim": data.H.dim, "G_dim": data.G.dim})


def cmd_aut(args) -> int:
    ctx = parse_field(args.field)
    grid = _parse_coeffs(args.grid, ctx)
    if args.construction == "h4":
        params = FamilyParams(2, ctx.from_int(-1), 2, None)
    elif args.construction == "taft":
        if args.m is None:
            raise ValueError("--m is required for taft")
        params = FamilyParams(args.m, ctx.root_of_unity(args.m), args.m, None)
    elif args.construction == "family":
        if args.m is None or args.zeta is None or args.l is None:
            raise ValueError("--m, --zeta and --l are required for family")
        zeta = parse_scalar(args.zeta, ctx)
        coeffs = _parse_coeffs(args.f, ctx) if args.f is not None else None
        params = FamilyParams(args.m, zeta, args.l, coeffs)
    else:
        raise ValueError(f"unknown construction {args.construction!r}")
    hits = family_aut_search(params, grid, jobs=args.jobs)
    rows = [{"k": k, "c": [str(x) for x in c]} for k, c in hits]
    _emit(args, {"construction": args.construction, "grid": [str(x) for x in grid],
                 "count": len(rows), "hits": rows})
    return EXIT_PASS


def cmd_check_lie(args) -> int:
    L = lie_from_json(_load_json(args.input))
    parts = {"lie": check_lie(L)}
    if args.b is not None:
        B = LinearMap.from_json(_load_json(args.b), L.ctx)
        lam = parse_scalar(args.weight, L.ctx)
        parts["rb_weight"] = check_rb_lie_weight(L, B, lam)
    rep = merge_reports(parts)
    return _report_exit(args, rep, {"dim": L.dim, "field": L.ctx.name()})


def cmd_check_group_rb(args) -> int:
    G = group_from_json(_load_json(args.group))
    if args.map is not None:
        B = tuple(int(x.strip()) for x in args.map.split(","))
    elif args.operator is not None:
        from .rb_group import operator_from_json
        _, w, B = operator_from_json(_load_json(args.operator))
        if args.weight is None:
            args.weight = w
    else:
        raise ValueError("one of --map or --operator is required")
    weight = 1 if args.weight is None else args.weight
    parts: dict = {}
    if weight in (1, -1):
        parts["rb"] = check_rb(G, B, weight)
    else:
        parts["rb"] = check_rb_lambda(G, B, weight)
    if weight == 1 and parts["rb"].ok:
        parts["lemma"] = lemma_checks(G, B)
        _, parts["derived_group"] = derived_group(G, B)
    rep = merge_reports(parts)
    return _report_exit(args, rep, {"group": G.name, "order": G.n, "weight": weight})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="scalar field: Q, Q(zN), or Fp")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="assignment budget for enumerations")
    common.add_argument("--out", default=None, help="write output to this path")
    common.add_argument("--format", choices=("json", "tsv"), default="json")

    p = argparse.ArgumentParser(prog="hopfrb", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="build a construction and check it")
    v.add_argument("--construction", required=True,
                   choices=("group-algebra", "h4", "taft", "family"))
    v.add_argument("--group", help="group table file (group-algebra)")
    v.add_argument("--m", type=int)
    v.add_argument("--zeta", help="root of unity, exact scalar string")
    v.add_argument("--l", type=int)
    v.add_argument("--f", help="comma-separated coefficients of f, constant first")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enum-rb", parents=[common],
                       help="enumerate Rota-Baxter operators on a finite group")
    e.add_argument("--group", required=True, help="group table file")
    e.add_argument("--weight", type=int, default=1)
    e.set_defaults(func=cmd_enum_rb)

    c = sub.add_parser("check-rrb", parents=[common],
                       help="check a relative Rota-Baxter operator file")
    c.add_argument("--input", required=True)
    c.add_argument("--full", action="store_true",
                   help="evaluate every condition instead of stopping at the first failure")
    c.set_defaults(func=cmd_check_rrb)

    a = sub.add_parser("aut", parents=[common],
                       help="search Hopf algebra automorphisms over a coefficient grid")
    a.add_argument("--construction", required=True, choices=("h4", "taft", "family"))
    a.add_argument("--grid", required=True, help="comma-separated exact scalars")
    a.add_argument("--m", type=int)
    a.add_argument("--zeta")
    a.add_argument("--l", type=int)
    a.add_argument("--f")
    a.set_defaults(func=cmd_aut)

    l = sub.add_parser("check-lie", parents=[common],
                       help="check a Lie algebra file, optionally with an operator")
    l.add_argument("--input", required=True)
    l.add_argument("--b", help="operator matrix file")
    l.add_argument("--weight", default="0", help="weight lambda, exact scalar string")
    l.set_defaults(func=cmd_check_lie)

    g = sub.add_parser("check-group-rb", parents=[common],
                       help="check one operator map on a finite group")
    g.add_argument("--group", required=True)
    g.add_argument("--map", help="comma-separated images, e.g. 0,2,1")
    g.add_argument("--operator", help="operator file as written by enum-rb")
    g.add_argument("--weight", type=int, default=None)
    g.set_defaults(func=cmd_check_group_rb)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as e:
        sys.stderr.write(f"cap exceeded: {e}\n")
        return EXIT_CAP
    except (ValueError, KeyError, IndexError, AssertionError, OSError,
            json.JSONDecodeError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
