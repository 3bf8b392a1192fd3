"""Fixed loci of x_s -> -x_s, Nikulin invariants (r, a) and mirror triplets.

The fixed locus on the minimal resolution is assembled from three sources:

* the section {x_s = 0}, always pointwise fixed;
* the coordinate subspace where t^{w_l} = +-1 is solvable with x_s != 0,
  decided by 2-adic valuations of the weights;
* exceptional curves over fixed singular points, found torically: a ray v of
  the resolution fan is pointwise fixed iff n * det(v, theta) is an integer,
  theta being the lifted action of the involution on the local chart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import sympy

from .involutions import NON_SYMPLECTIC, classify_involution
from .quasismooth import quasismooth_exact
from .singular import lattice_rays, singular_loci
from .wps import NotReducible, Weight, WPolynomial, as_weight, reduce_curve_model

TYPE_I, TYPE_II, TYPE_III = "I", "II", "III"

# triplets with no mirror partner
PALE_REGION = frozenset({
    (20, 2, 1), (19, 3, 1), (18, 4, 1), (18, 4, 0), (17, 5, 1),
    (16, 6, 1), (15, 7, 1), (14, 8, 1), (13, 9, 1), (12, 10, 1),
})
NO_MIRROR = PALE_REGION | {(14, 6, 0)}


class FixedLocusError(ValueError):
    pass


@dataclass(frozen=True)
class Component:
    genus: int
    source: str  # "section", "coordinate-plane", "coordinate-line", "exceptional"
    detail: str = ""
    plane: tuple[int, ...] = field(default=(), compare=False)  # coordinates allowed nonzero
    factor: object = field(default=None, compare=False, repr=False)  # sympy factor, 0 for a line
    multiplicity: int = field(default=1, compare=False)  # C-components sharing this factor


@dataclass
class FixedLocusReport:
    components: list[Component]
    kind: str = TYPE_I
    g: int = 0
    k: int = 0

    @property
    def genus_curve(self) -> Component | None:
        pos = [c for c in self.components if c.genus > 0]
        return pos[0] if len(pos) == 1 else None

    @property
    def rational_components(self) -> list[Component]:
        return [c for c in self.components if c.genus == 0]


@dataclass(frozen=True)
class NikulinInvariants:
    r: int
    a: int
    delta: int | None = None

    def __post_init__(self):
        if (self.r - self.a) % 2 or not 1 <= self.r <= 20 or self.a < 0 or self.r + self.a > 22:
            raise ValueError(f"invalid Nikulin invariants ({self.r},{self.a})")

    @property
    def g(self) -> int:
        return (22 - self.r - self.a) // 2

    @property
    def k(self) -> int:
        return (self.r - self.a) // 2

    def pair(self) -> tuple[int, int]:
        return (self.r, self.a)


def v2(n: int) -> int:
    return (n & -n).bit_length() - 1


def fixed_curve_genus(w3, f: WPolynomial) -> int:
    w1, w2, w3_ = as_weight(w3).entries
    d = f.degree
    ws = (w1, w2, w3_)
    s = Fraction(d * d, w1 * w2 * w3_)
    s -= d * sum(Fraction(gcd(ws[i], ws[j]), ws[i] * ws[j]) for i in range(3) for j in range(i + 1, 3))
    s += sum(Fraction(gcd(d, x), x) for x in ws)
    g = (s - 1) / 2
    if g.denominator != 1 or g < 0:
        raise FixedLocusError(f"genus formula gives {g} for {f} in {as_weight(w3)}")
    return int(g)


def _curve_components(plane, weights: tuple[int, ...], expr, syms, label: str) -> list[Component]:
    """Components over C of a weighted plane curve given as a sympy expression."""
    plane = tuple(plane)
    out = []
    if expr == 0:
        raise FixedLocusError(f"{label}: restricted equation vanishes identically")
    _, factors = sympy.factor_list(sympy.expand(expr), *syms)
    for fac, mult in factors:
        if mult > 1:
            raise FixedLocusError(f"{label}: non-reduced factor {fac}")
        poly = sympy.Poly(fac, *syms)
        terms = poly.terms()
        if len(terms) == 1:
            out.append(Component(0, label, f"line {fac}", plane, fac))
            continue
        if len(terms) == 2:
            diff = [a - b for a, b in zip(terms[0][0], terms[1][0])]
            ncomp = 0
            for x in diff:
                ncomp = gcd(ncomp, abs(x))
            out.extend(Component(0, label, f"rational, from {fac}", plane, fac, ncomp) for _ in range(ncomp))
            continue
        exps = tuple(tuple(e) for e, _ in terms)
        coefs = tuple(int(c) for _, c in terms)
        curve = WPolynomial(Weight(weights), coefs, exps)
        try:
            nw, model, _ = reduce_curve_model(weights, curve)
        except NotReducible:
            nw, model = Weight(weights), curve
        g = fixed_curve_genus(nw, model)
        out.append(Component(g, label, f"{fac} in P{nw}", plane, fac))
    return out


def _restricted(F: WPolynomial, keep: list[int]):
    syms = sympy.symbols(f"x0:{F.nvars}")
    zero = {syms[m]: 0 for m in range(F.nvars) if m not in keep}
    expr = F.to_sympy(syms).subs(zero)
    return expr, [syms[m] for m in keep]


def _theta(w, support, s, k, l):
    L = lcm(*[w[m] for m in support])
    for j in range(2 * L):
        tau = Fraction(j, 2 * L)
        if all((tau * w[m] + Fraction(int(m == s), 2)).denominator == 1 for m in support):
            return (
                tau * w[k] + Fraction(int(k == s), 2),
                tau * w[l] + Fraction(int(l == s), 2),
            )
    raise FixedLocusError(f"singular point with support {support} is not fixed")


def fixed_exceptional_divisors(w, sing, s: int) -> list[int]:
    """1-based indices (from the E_1 end) of pointwise fixed exceptional curves."""
    k, l = sing.local_coordinates
    n = sing.n
    theta = _theta(w, sing.support, s, k, l)
    rays = lattice_rays(n, w[k] % n, w[l] % n)
    fixed = []
    for idx, v in enumerate(rays, 1):
        det = v[0] * theta[1] - v[1] * theta[0]
        if (n * det).denominator == 1:
            fixed.append(idx)
    return fixed


def fixed_locus(w, F: WPolynomial, s: int) -> FixedLocusReport:
    w = as_weight(w)
    if classify_involution(F, s) != NON_SYMPLECTIC:
        raise FixedLocusError(f"x{s} -> -x{s} is symplectic on {F}")
    nv = F.nvars
    others = [m for m in range(nv) if m != s]
    comps: list[Component] = []

    expr, syms = _restricted(F, others)
    comps += _curve_components(others, tuple(w[m] for m in others), expr, syms, "section")

    W = [m for m in others if v2(w[m]) > v2(w[s])]
    if len(W) == 2:
        keep = [s] + W
        expr, syms = _restricted(F, keep)
        xs = syms[0]
        # drop the part lying in {x_s = 0}, already in the section
        while expr != 0 and sympy.expand(expr).subs(xs, 0) == 0:
            expr = sympy.cancel(expr / xs)
        if expr != 0 and sympy.Poly(expr, *syms).total_degree() > 0:
            comps += _curve_components(keep, tuple(w[m] for m in keep), expr, syms, "coordinate-plane")
    elif len(W) == 1:
        expr, syms = _restricted(F, [s] + W)
        if expr == 0:
            comps.append(Component(0, "coordinate-line", f"x{s},x{W[0]} line", (s, W[0]), sympy.Integer(0)))
    elif len(W) > 2:
        raise FixedLocusError("weights are not normalized")

    for sing in singular_loci(w, F, s):
        if sing.sigma_swapped:
            continue
        for idx in fixed_exceptional_divisors(w, sing, s):
            for p in range(sing.point_count):
                comps.append(Component(0, "exceptional", f"E_{idx} over {sing.label} at support {sing.support} #{p + 1}"))

    report = FixedLocusReport(comps)
    positive = [c for c in comps if c.genus > 0]
    if not comps:
        report.kind = TYPE_II
    elif len(positive) == 2 and len(comps) == 2 and all(c.genus == 1 for c in positive):
        report.kind = TYPE_III
    elif len(positive) > 1:
        raise FixedLocusError(f"{len(positive)} curves of positive genus")
    elif positive:
        report.g = positive[0].genus
        report.k = len(comps) - 1
    else:
        report.k = len(comps) - 1
    return report


def nikulin_invariants(report: FixedLocusReport) -> NikulinInvariants:
    if report.kind == TYPE_II:
        return NikulinInvariants(10, 10, 0)
    if report.kind == TYPE_III:
        return NikulinInvariants(10, 8, 0)
    r = 11 - report.g + report.k
    a = 11 - report.g - report.k
    if a < 0:
        raise FixedLocusError(f"impossible fixed locus g={report.g}, k={report.k}")
    return NikulinInvariants(r, a)


def invariants_of(w, F: WPolynomial, s: int) -> NikulinInvariants:
    return _invariants_cached(as_weight(w), F, s)


@lru_cache(maxsize=1024)
def _invariants_cached(w, F, s):
    return nikulin_invariants(fixed_locus(w, F, s))


def is_borcea_type(F: WPolynomial) -> bool:
    x0 = [e for e in F.exponents if e[0]]
    return len(x0) == 1 and x0[0][0] == 2 and sum(x0[0]) == 2


def r_closed_formula(w, F: WPolynomial) -> int:
    """Closed formula for r in terms of r(Q); assumes rank Pic(S_0)^sigma = 1."""
    from .singular import exceptional_rank

    w = as_weight(w)
    if not is_borcea_type(F):
        raise ValueError("closed formula only covers x_0^2 = f equations")
    rq = exceptional_rank(w, F)
    w0 = w[0]
    if w0 % 2:
        for wi in w.entries[1:]:
            if wi % 2 and gcd(w0, wi) >= 2:
                return rq - wi + 2
        return rq + 1
    corr = sum(
        Fraction((gcd(w0, wi) - 1) * (2 * gcd(w0, wi)), wi) - (gcd(w0, wi) - 1)
        for wi in w.entries[1:]
    )
    r = rq + 1 - corr
    if r.denominator != 1:
        raise ValueError(f"closed formula is not integral: {r}")
    return int(r)


@dataclass(frozen=True)
class MirrorResult:
    mirror: NikulinInvariants | None
    reason: str = ""
    conditional: bool = False


def mirror_triplet(t: NikulinInvariants) -> MirrorResult:
    if t.delta is None:
        blocked = [d for d in (0, 1) if (t.r, t.a, d) in NO_MIRROR]
        if len(blocked) == 2:
            return MirrorResult(None, "no mirror for either value of delta")
        if blocked:
            return MirrorResult(
                NikulinInvariants(20 - t.r, t.a), f"no mirror if delta = {blocked[0]}", conditional=True
            )
        return MirrorResult(NikulinInvariants(20 - t.r, t.a))
    if (t.r, t.a, t.delta) in PALE_REGION:
        return MirrorResult(None, "pale region")
    if (t.r, t.a, t.delta) == (14, 6, 0):
        return MirrorResult(None, "(14,6,0) has no mirror partner")
    return MirrorResult(NikulinInvariants(20 - t.r, t.a, t.delta))


def lattice_a_check(gram, a: int) -> bool:
    M = sympy.Matrix(gram)
    if M != M.T:
        raise ValueError("Gram matrix must be symmetric")
    return abs(int(M.det())) == 2**a


@dataclass
class AtlasResult:
    pairs: dict[tuple[int, int], list[str]] = field(default_factory=dict)
    discrepancies: list[str] = field(default_factory=list)

    def add(self, pair, provenance):
        self.pairs.setdefault(pair, []).append(provenance)


def triplet_atlas(records, extra_involutions=()) -> AtlasResult:
    """Run the fixed-locus pipeline on records and on (id, F, var, expected) extras."""
    res = AtlasResult()
    jobs = []
    for rec in records:
        if rec.equation is None or rec.involution_variable is None:
            continue
        jobs.append((f"#{rec.yonemura_id}", rec.weight, rec.equation, rec.involution_variable, rec.expected))
    for yid, F, var, expected in extra_involutions:
        jobs.append((f"#{yid} var {var}", F.weight, F, var, expected))
    for label, w, F, var, expected in jobs:
        try:
            pair = invariants_of(w, F, var).pair()
        except Exception as exc:  # collected, not fatal
            res.discrepancies.append(f"{label}: {type(exc).__name__}: {exc}")
            continue
        res.add(pair, label)
        if expected is not None and tuple(expected) != pair:
            res.discrepancies.append(f"{label}: computed {pair}, expected {tuple(expected)}")
    return res


def check_quasismooth(F: WPolynomial) -> bool:
    return quasismooth_exact(F)


# ------------------------------------------------------------ Lefschetz check


def lefschetz_r(w, F: WPolynomial, s: int) -> int:
    """r from the topological Lefschetz formula, independent of the fan test.

    chi(S^sigma) = chi(S_0^sigma) + (trace of sigma on exceptional classes)
    and chi(S^sigma) = 2r - 20. Fixed curves on S_0 meet only at singular
    points, so chi(S_0^sigma) is the sum of the component Euler numbers
    corrected by the multiplicities found at the fixed singular points.
    """
    from .singular import point_groups

    w = as_weight(w)
    report = fixed_locus(w, F, s)
    curves = [c for c in report.components if c.source != "exceptional"]
    syms = sympy.symbols(f"x0:{F.nvars}")
    chi = sum(2 - 2 * c.genus for c in curves)
    trace = 0
    for sing in singular_loci(w, F, s):
        if sing.sigma_swapped:
            continue
        trace += len(sing.chain) * sing.point_count
        for size, member in point_groups(F, sing, syms):
            m = sum(member(c) for c in curves)
            chi += size * (1 if m == 0 else 1 - m)
    total = chi + trace + 20
    if total % 2:
        raise FixedLocusError(f"odd Lefschetz total {total}")
    return total // 2
