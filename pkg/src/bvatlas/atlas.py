"""Dataset ingestion, table reproduction and the full verification run."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .wps import K3Record, Weight, WPolynomial

ENV_VAR = "ATLAS_DATASET"
LETTERS = "xyzw"

TABLE_TITLES = {
    1: "Borcea weights, w0 odd",
    2: "Borcea weights, w0 = 2 mod 4",
    3: "Borcea weights, w0 = 0 mod 4",
    4: "x0^2 x_i type equations",
    5: "x^3 replaced by x^2 y",
    6: "involution on a variable other than x",
    7: "no quasi-smooth Delsarte form",
    8: "additional involutions",
    9: "mirror partners, first half",
    10: "mirror partners, second half",
}


class DatasetError(ValueError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class ExtraInvolution:
    id: int
    equation: WPolynomial
    variable: int
    expected: tuple[int, int]


@dataclass
class Dataset:
    version: str
    records: list[K3Record]
    extra_involutions: list[ExtraInvolution]
    mirror_table: list[dict]
    raw: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self.by_id = {r.yonemura_id: r for r in self.records}

    def get(self, yid: int) -> K3Record:
        try:
            return self.by_id[yid]
        except KeyError:
            raise KeyError(f"no record #{yid}") from None

    def printed_equation(self, yid: int) -> WPolynomial | None:
        """The equation exactly as tabulated, before any erratum."""
        rec = self.get(yid)
        raw = next(r for r in self.raw.get("records", []) if r["id"] == yid)
        if raw.get("printed_monomials"):
            return _polynomial(rec.weight, raw["printed_monomials"])
        return rec.equation

    def table(self, k: int) -> list[K3Record]:
        if k == 7:
            ids = (85, 90, 91, 93, 94, 95)
            return [self.by_id[i] for i in ids]
        return [r for r in self.records if r.source_table == k]

    @property
    def mirror_pairs(self) -> list[tuple[int, list[int]]]:
        return [(row["id"], [p["id"] for p in row["partners"]]) for row in self.mirror_table]

    def to_json(self) -> str:
        return json.dumps(self.raw, indent=1) + "\n"


def _polynomial(weight, monomials) -> WPolynomial:
    return WPolynomial(weight, tuple(m["coef"] for m in monomials), tuple(tuple(m["exp"]) for m in monomials))


def parse_dataset(data: dict) -> Dataset:
    problems = []
    records = []
    seen = set()
    for raw in data.get("records", []):
        rid = raw.get("id")
        if rid in seen:
            problems.append(f"#{rid}: duplicate id")
            continue
        seen.add(rid)
        try:
            w = Weight(tuple(raw["weight"]))
            if raw["degree"] != w.total:
                raise ValueError(f"degree {raw['degree']} != weight sum {w.total}")
            eq = _polynomial(w, raw["monomials"]) if raw["monomials"] else None
            exp = raw.get("expected")
            records.append(K3Record(
                rid, w, eq, raw.get("borcea_id"), raw.get("involution_var"),
                exp["r"] if exp else None, exp["a"] if exp else None,
                raw.get("table", 0), tuple(raw["mirror_ids"]) if raw.get("mirror_ids") else None,
                raw.get("terms_removed", ""),
            ))
        except (KeyError, TypeError, ValueError) as exc:
            problems.append(f"#{rid}: {exc}")
    by_id = {r.yonemura_id: r for r in records}
    extras = []
    for raw in data.get("extra_involutions", []):
        try:
            w = by_id[raw["id"]].weight
            extras.append(ExtraInvolution(
                raw["id"], _polynomial(w, raw["monomials"]), raw["involution_var"],
                (raw["expected"]["r"], raw["expected"]["a"]),
            ))
        except (KeyError, TypeError, ValueError) as exc:
            problems.append(f"extra involution #{raw.get('id')}: {exc}")
    if problems:
        raise DatasetError(problems)
    return Dataset(str(data.get("version", "")), records, extras, data.get("mirror_table", []), data)


def default_path():
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return resources.files("bvatlas") / "data" / "k3_atlas.json"


def ingest(path=None) -> Dataset:
    src = Path(path) if path is not None else default_path()
    text = src.read_text()
    if not text.strip():
        raise DatasetError([f"{src}: empty file"])
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError([f"{src}: {exc}"]) from None
    return parse_dataset(data)


# ------------------------------------------------------------------ tables


def _computed(w, F, var):
    from .nikulin import invariants_of

    try:
        return invariants_of(w, F, var).pair()
    except Exception as exc:
        return f"error: {exc}"


def table_rows(ds: Dataset, k: int) -> list[dict]:
    if k in (9, 10):
        return _mirror_rows(ds, k)
    rows = []
    if k == 8:
        for ex in ds.extra_involutions:
            rec = ds.get(ex.id)
            got = _computed(rec.weight, ex.equation, ex.variable)
            rows.append({
                "id": ex.id, "weight": str(rec.weight), "equation": ex.equation.pretty(),
                "sigma": LETTERS[ex.variable], "expected": ex.expected, "computed": got,
            })
        return rows
    for rec in ds.table(k):
        var = rec.involution_variable if k != 7 else 0
        got = _computed(rec.weight, rec.equation, var)
        row = {"id": rec.yonemura_id}
        if rec.borcea_id is not None:
            row["borcea_id"] = rec.borcea_id
        row.update({
            "weight": str(rec.weight), "equation": rec.equation.pretty(),
            "sigma": LETTERS[var], "expected": rec.expected, "computed": got,
            "terms_removed": rec.notes,
        })
        rows.append(row)
    return rows


def _mirror_rows(ds: Dataset, k: int) -> list[dict]:
    rows = []
    for m in ds.mirror_table:
        if m["table"] != k:
            continue
        rec = ds.get(m["id"])
        problems, notes = [], []
        for p in m["partners"]:
            prec = ds.get(p["id"])
            if m["rank"] + p["rank"] != 20:
                problems.append(f"#{p['id']}: rank {p['rank']} != 20-{m['rank']}")
            if p["weight"] is not None and tuple(p["weight"]) != prec.weight.entries:
                problems.append(f"#{p['id']}: weight {tuple(p['weight'])} != {prec.weight}")
            if p["borcea_id"] is not None and p["borcea_id"] != prec.borcea_id:
                problems.append(f"#{p['id']}: B#{p['borcea_id']} != {prec.borcea_id}")
            own = next((r for r in ds.mirror_table if r["id"] == p["id"]), None)
            if own is not None and own["rank"] != 20 - m["rank"]:
                notes.append(f"#{p['id']} has rank {own['rank']} in its own row")
        weight_ok = tuple(m["printed_weight"]) == rec.weight.entries or any(
            tuple(e.get("weight", ())) == rec.weight.entries for e in m["errata"]
        )
        if not weight_ok:
            problems.append(f"row weight {tuple(m['printed_weight'])} != {rec.weight}")
        rows.append({
            "id": m["id"], "weight": str(rec.weight), "rank": m["rank"],
            "partners": [p["id"] for p in m["partners"]],
            "partner_ranks": [p["rank"] for p in m["partners"]],
            "errata": [p["erratum"]["printed"] for p in m["partners"] if "erratum" in p]
            + [e["printed"] for e in m["errata"]],
            "expected": "r + r' = 20", "computed": "ok" if not problems else "; ".join(problems),
            "notes": "; ".join(notes),
        })
    return rows


def row_diff(row: dict) -> bool:
    """True if the computed column disagrees with the expected one."""
    if row["expected"] == "r + r' = 20":
        return row["computed"] != "ok"
    exp = row["expected"]
    return exp is not None and tuple(exp) != row["computed"]


def _cell(v):
    if isinstance(v, tuple):
        return "(" + ",".join(map(str, v)) + ")"
    if isinstance(v, list):
        return " ".join(map(str, v))
    return "" if v is None else str(v)


def reproduce_table(ds: Dataset, k: int, fmt: str = "csv") -> str:
    if k not in TABLE_TITLES:
        raise ValueError(f"table must be 1..10, got {k}")
    rows = table_rows(ds, k)
    if fmt == "json":
        return json.dumps({"table": k, "title": TABLE_TITLES[k], "rows": rows}, indent=1, default=list) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt}")
    buf = io.StringIO()
    cols = list(rows[0]) if rows else []
    for r in rows:
        cols += [c for c in r if c not in cols]
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(cols)
    for r in rows:
        wr.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue()


# ------------------------------------------------------------------ verify


@dataclass
class Report:
    entries: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.entries.append((name, bool(ok), detail))

    @property
    def failures(self):
        return [e for e in self.entries if not e[1]]

    def render(self) -> str:
        lines = [f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail and not ok else "")
                 for name, ok, detail in self.entries]
        lines.append(f"{len(self.entries) - len(self.failures)}/{len(self.entries)} checks passed")
        return "\n".join(lines)


def verify_all(ds: Dataset, zeta_checks: bool = True) -> Report:
    from .bv import hodge_numbers, orbifold_hodge
    from .involutions import NON_SYMPLECTIC, classify_involution
    from .nikulin import fixed_locus, nikulin_invariants, triplet_atlas
    from .quasismooth import combinatorial_form_check, quasismooth_exact

    rep = Report()
    for rec in ds.records:
        if rec.equation is None or rec.involution_variable is None:
            continue
        tag = f"#{rec.yonemura_id}"
        F = rec.equation
        if F.is_delsarte:
            rep.add(f"{tag} quasi-smooth", combinatorial_form_check(F).combinatorial_pass and quasismooth_exact(F))
        try:
            rep.add(f"{tag} non-symplectic", classify_involution(F, rec.involution_variable) == NON_SYMPLECTIC)
            report = fixed_locus(rec.weight, F, rec.involution_variable)
            inv = nikulin_invariants(report)
            rep.add(f"{tag} (r,a)", inv.pair() == rec.expected, f"computed {inv.pair()}, expected {rec.expected}")
            if report.kind == "I":
                h = hodge_numbers(inv.r, inv.a)
                o = orbifold_hodge(report.g, report.k, inv.r)
                rep.add(f"{tag} hodge", (h.h11, h.h21) == (o.h11, o.h21))
        except Exception as exc:
            rep.add(f"{tag} pipeline", False, f"{type(exc).__name__}: {exc}")
    for ex in ds.extra_involutions:
        try:
            got = nikulin_invariants(fixed_locus(ds.get(ex.id).weight, ex.equation, ex.variable)).pair()
        except Exception as exc:
            got = f"{type(exc).__name__}: {exc}"
        rep.add(f"#{ex.id} sigma at {LETTERS[ex.variable]} (r,a)", got == ex.expected,
                f"computed {got}, expected {ex.expected}")
    atlas = triplet_atlas(ds.records, [(e.id, e.equation, e.variable, e.expected) for e in ds.extra_involutions])
    rep.add("triplet atlas size >= 40", len(atlas.pairs) >= 40, f"{len(atlas.pairs)} distinct pairs")
    for k in (9, 10):
        for row in table_rows(ds, k):
            rep.add(f"table {k} #{row['id']} mirror", not row_diff(row), row["computed"])
    if zeta_checks:
        from .zeta import count_points_bruteforce, count_points_charsum
        from .wps import diagonal_exponents

        for rec in ds.records:
            F = rec.equation
            if F is None or diagonal_exponents(F) is None or F.nvars != 4:
                continue
            m = 1
            for e in diagonal_exponents(F):
                m = m * e // __import__("math").gcd(m, e)
            p = _small_split_prime(m, limit=31)
            if p is None:
                continue
            a = count_points_charsum(rec.weight, F, p)
            b = count_points_bruteforce(rec.weight, F, p)
            rep.add(f"#{rec.yonemura_id} point count p={p}", a == b, f"charsum {a}, brute force {b}")
    return rep


def _small_split_prime(m: int, limit: int):
    from sympy import isprime

    p = m + 1
    while p <= limit:
        if isprime(p):
            return p
        p += m
    return None
