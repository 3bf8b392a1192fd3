"""Command-line entry point: `atlas <command>`."""

from __future__ import annotations

import argparse
import json
import re
import sys

from .atlas import LETTERS, DatasetError, ingest, reproduce_table, row_diff, table_rows, verify_all

VAR_NAMES = {c: i for i, c in enumerate(LETTERS)}


def _var(text: str) -> int:
    if text in VAR_NAMES:
        return VAR_NAMES[text]
    return int(text)


def _record(ds, yid):
    rec = ds.get(int(yid))
    if rec.equation is None:
        raise SystemExit(f"#{yid} has no Delsarte equation in the dataset")
    return rec


def cmd_weights(ds, args) -> int:
    also = {r["id"]: r.get("also_in_tables", []) for r in ds.raw.get("records", [])}
    for rec in ds.records:
        eq = rec.equation.pretty() if rec.equation is not None else "-"
        tables = ",".join(map(str, sorted({rec.source_table, *also.get(rec.yonemura_id, [])})))
        print(f"{rec.yonemura_id:>3}  {str(rec.weight):<16} table {tables:<6} {eq}")
    return 0


def cmd_search(ds, args) -> int:
    from .involutions import delsarte_search
    from .wps import Weight

    key = args.key.strip()
    if key.isdigit():
        w = ds.get(int(key)).weight
    else:
        w = Weight(tuple(int(x) for x in re.findall(r"\d+", key)))
    cands = delsarte_search(w)
    print(f"{len(cands)} candidates for {w}")
    for c in cands:
        print(f"  sigma at {LETTERS[c.variable_index]}: {c.equation.pretty()}  ({c.classification})")
    return 0


def cmd_nikulin(ds, args) -> int:
    from .nikulin import fixed_locus, nikulin_invariants

    rec = _record(ds, args.id)
    var = rec.involution_variable if args.var is None else _var(args.var)
    report = fixed_locus(rec.weight, rec.equation, var)
    inv = nikulin_invariants(report)
    print(f"#{rec.yonemura_id} {rec.weight}: {rec.equation.pretty()}, sigma at {LETTERS[var]}")
    for c in report.components:
        print(f"  genus {c.genus} curve from {c.source}: {c.detail}")
    print(f"  type {report.kind}, (g,k) = ({report.g},{report.k}), (r,a) = {inv.pair()}")
    expected = rec.expected if var == rec.involution_variable else next(
        (e.expected for e in ds.extra_involutions if e.id == rec.yonemura_id and e.variable == var), None)
    if expected is not None and tuple(expected) != inv.pair():
        print(f"  DIFF: table has {tuple(expected)}")
        return 1
    return 0


def cmd_hodge(ds, args) -> int:
    from .bv import hodge_numbers
    from .nikulin import invariants_of

    rec = _record(ds, args.id)
    inv = invariants_of(rec.weight, rec.equation, rec.involution_variable)
    h = hodge_numbers(inv.r, inv.a)
    print(f"#{rec.yonemura_id} (r,a) = {inv.pair()}: h11 = {h.h11}, h21 = {h.h21}, e = {h.euler}")
    return 0


def cmd_twist(ds, args) -> int:
    from .bv import Unsupported, twist_model

    rec = _record(ds, args.id)
    try:
        m = twist_model(rec.weight, rec.equation, args.curve.upper(), rec.yonemura_id)
    except Unsupported as exc:
        print(f"unsupported: {exc}")
        return 1
    qs = "" if m.quasi_smooth else "  (not quasi-smooth)"
    print(f"P{m.weight5} degree {m.degree}: {m.text}{qs}")
    return 0


def cmd_mirror(ds, args) -> int:
    from .nikulin import NikulinInvariants, invariants_of, mirror_triplet

    rec = _record(ds, args.id)
    inv = invariants_of(rec.weight, rec.equation, rec.involution_variable)
    res = mirror_triplet(NikulinInvariants(inv.r, inv.a))
    if res.mirror is None:
        print(f"#{rec.yonemura_id} (r,a) = {inv.pair()}: {res.reason}")
    else:
        note = f" ({res.reason})" if res.reason else ""
        print(f"#{rec.yonemura_id} (r,a) = {inv.pair()} -> mirror (r,a) = {res.mirror.pair()}{note}")
    row = next((m for m in ds.mirror_table if m["id"] == rec.yonemura_id), None)
    if row is not None:
        print("  table partners: " + ", ".join(f"#{p['id']} (r={p['rank']})" for p in row["partners"]))
    return 0


def cmd_zeta(ds, args) -> int:
    from . import zeta

    if args.zeta_cmd == "count":
        rec = _record(ds, args.id)
        n = zeta.count_points_bruteforce(rec.weight, rec.equation, args.p)
        print(f"#{rec.yonemura_id} over F_{args.p}: {n} points (brute force)")
        try:
            c = zeta.count_points_charsum(rec.weight, rec.equation, args.p)
        except zeta.Unsupported as exc:
            print(f"  character sum: {exc}")
            return 0
        print(f"  character sum: {c}")
        return 0 if c == n else 1
    a = zeta.CharVector(args.m, tuple(int(x) for x in args.a.split(",")))
    j = zeta.jacobi_sum(args.p, a)
    print(f"j_{args.p}{a.entries} = {j}")
    print("  |j| under embeddings: " + ", ".join(f"{abs(z):.6f}" for z in j.embeddings()))
    return 0


def cmd_table(ds, args) -> int:
    if not args.diff:
        sys.stdout.write(reproduce_table(ds, args.k, args.format))
        return 0
    bad = [r for r in table_rows(ds, args.k) if row_diff(r)]
    if args.format == "json":
        print(json.dumps(bad, indent=1, default=list))
    else:
        for r in bad:
            print(f"#{r['id']}: expected {r['expected']}, computed {r['computed']}")
        print(f"{len(bad)} differing rows")
    return 1 if bad else 0


def cmd_verify(ds, args) -> int:
    rep = verify_all(ds, zeta_checks=not args.no_zeta)
    print(rep.render())
    return 1 if rep.failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="atlas", description="K3 surfaces with involution and Borcea-Voisin threefolds")
    ap.add_argument("--dataset", help="dataset JSON (default: $ATLAS_DATASET or the bundled file)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    w = sub.add_parser("weights")
    w.add_argument("what", choices=["list"])
    w.set_defaults(func=cmd_weights)

    s = sub.add_parser("search", help="4-monomial involution-compatible equations")
    s.add_argument("key", help="record id or weight such as 5,2,2,1")
    s.set_defaults(func=cmd_search)

    n = sub.add_parser("nikulin")
    n.add_argument("id", type=int)
    n.add_argument("--var", help="involution variable: index or x/y/z/w")
    n.set_defaults(func=cmd_nikulin)

    for name, fn in (("hodge", cmd_hodge), ("mirror", cmd_mirror)):
        p = sub.add_parser(name)
        p.add_argument("id", type=int)
        p.set_defaults(func=fn)

    t = sub.add_parser("twist")
    t.add_argument("id", type=int)
    t.add_argument("--curve", choices=["e2", "e3", "E2", "E3"], required=True)
    t.set_defaults(func=cmd_twist)

    z = sub.add_parser("zeta")
    zs = z.add_subparsers(dest="zeta_cmd", required=True)
    zc = zs.add_parser("count")
    zc.add_argument("--id", type=int, required=True)
    zc.add_argument("-p", type=int, required=True)
    zj = zs.add_parser("jacobi")
    zj.add_argument("-p", type=int, required=True)
    zj.add_argument("-m", type=int, required=True)
    zj.add_argument("-a", required=True, help="comma-separated entries")
    z.set_defaults(func=cmd_zeta)

    tb = sub.add_parser("table")
    tb.add_argument("k", type=int, choices=range(1, 11))
    tb.add_argument("--format", choices=["csv", "json"], default="csv")
    tb.add_argument("--diff", action="store_true")
    tb.set_defaults(func=cmd_table)

    v = sub.add_parser("verify")
    v.add_argument("--no-zeta", action="store_true", help="skip the point-count checks")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ds = ingest(args.dataset)
    except (DatasetError, OSError, ValueError) as exc:
        print(f"dataset error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(ds, args)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
