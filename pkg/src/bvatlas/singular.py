"""Cyclic quotient singularities of quasi-smooth weighted K3 surfaces.

Singular points sit where the stabilizer of the weighted torus action is
nontrivial: coordinate vertices P_i lying on the surface and points on the
edges {x_k = x_l = 0} whose two surviving weights share a factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import sympy

from .wps import WPolynomial, as_weight

VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class HJExpansion:
    n: int
    q: int
    digits: tuple[int, ...]

    def value(self) -> Fraction:
        v = Fraction(self.digits[-1])
        for b in reversed(self.digits[:-1]):
            v = b - 1 / v
        return v


def hj_expand(n: int, q: int) -> HJExpansion:
    """Negative-regular continued fraction n/q = b1 - 1/(b2 - ...)."""
    if not (n > q >= 1) or gcd(n, q) != 1:
        raise ValueError(f"need n > q >= 1 coprime, got ({n}, {q})")
    digits = []
    a, b = n, q
    while b:
        c = -(-a // b)  # ceiling
        digits.append(c)
        a, b = b, c * b - a
    return HJExpansion(n, q, tuple(digits))


@dataclass
class QuotientSingularity:
    kind: str
    support: tuple[int, ...]  # coordinates nonzero at the point(s)
    residual: tuple  # exponents of the restricted equation along the stratum
    point_count: int
    n: int
    q: int
    local_coordinates: tuple[int, int]
    chain: list[int] = field(default_factory=list)  # self-intersections E_1..E_{n'}
    sigma_swapped: bool | None = None
    edge_h: tuple = ()  # h(u) coefficients for edge strata, ascending

    @property
    def stratum(self) -> tuple[int, ...]:
        """Indices of the vanishing coordinates."""
        total = len(self.residual[0]) if self.residual else 4
        return tuple(i for i in range(total) if i not in self.support)

    @property
    def label(self) -> str:
        if self.q == self.n - 1:
            return f"A_{self.n - 1}"
        return f"A_{{{self.n},{self.q}}}"


class NotQuasiSmooth(ValueError):
    pass


def lattice_rays(n: int, a: int, b: int) -> list[tuple[Fraction, Fraction]]:
    """Interior rays of the resolution of C^2/mu_n acting by (zeta^a, zeta^b).

    Lattice N = Z^2 + Z(a/n, b/n); the rays are the points of N on the
    boundary of conv(N in the open quadrant), listed from e1 towards e2.
    """
    pts = [(Fraction(j * a % n, n), Fraction(j * b % n, n)) for j in range(1, n)]
    pts.sort()
    chain = [(Fraction(0), Fraction(1))]
    for p in pts + [(Fraction(1), Fraction(0))]:
        while len(chain) >= 2:
            o, m = chain[-2], chain[-1]
            cross = (m[0] - o[0]) * (p[1] - o[1]) - (m[1] - o[1]) * (p[0] - o[0])
            if cross < 0:
                chain.pop()
            else:
                break
        chain.append(p)
    # keep only points on the lower boundary (collinear points included)
    inner = chain[1:-1]
    inner.reverse()
    return inner


def chain_self_intersections(n: int, a: int, b: int) -> list[int]:
    rays = [(Fraction(1), Fraction(0))] + lattice_rays(n, a, b) + [(Fraction(0), Fraction(1))]
    out = []
    for k in range(1, len(rays) - 1):
        s = (rays[k - 1][0] + rays[k + 1][0], rays[k - 1][1] + rays[k + 1][1])
        v = rays[k]
        ratio = s[0] / v[0] if v[0] else s[1] / v[1]
        assert ratio.denominator == 1 and (ratio * v[0], ratio * v[1]) == s
        out.append(-int(ratio))
    return out


def _vertex_coordinates(F: WPolynomial, i: int) -> tuple[int, int]:
    eliminable = sorted(
        j for e in F.exponents for j in range(F.nvars)
        if j != i and e[i] >= 1 and e[j] == 1 and sum(e) == e[i] + 1
    )
    if not eliminable:
        raise NotQuasiSmooth(f"vertex P{i} lies on the surface with no x{i}^a x_j term")
    j = eliminable[0]
    k, l = (m for m in range(F.nvars) if m not in (i, j))
    return k, l


def _type(w, n: int, k: int, l: int) -> int:
    a, b = w[k] % n, w[l] % n
    if gcd(a, n) != 1 or gcd(b, n) != 1:
        raise NotQuasiSmooth(f"non-isolated stabilizer at a point with local weights ({w[k]},{w[l]}) mod {n}")
    return a * pow(b, -1, n) % n


def edge_polynomial(F: WPolynomial, i: int, j: int):
    """F on the edge {x_i, x_j free}: returns (alpha, beta, h) with G = x_i^a x_j^b h(u).

    u = x_i^beta / x_j^alpha, where w_i = d*alpha, w_j = d*beta; h is a
    list of coefficients by ascending power of u with h[0] != 0.
    """
    w = F.weight
    d = gcd(w[i], w[j])
    alpha, beta = w[i] // d, w[j] // d
    terms = [(c, e) for c, e in F.terms() if all(e[m] == 0 for m in range(F.nvars) if m not in (i, j))]
    if not terms:
        return alpha, beta, None
    a0 = min(e[i] for _, e in terms)
    h = {}
    for c, e in terms:
        t, rem = divmod(e[i] - a0, beta)
        assert rem == 0
        h[t] = h.get(t, 0) + c
    deg = max(h)
    return alpha, beta, [h.get(t, 0) for t in range(deg + 1)]


def distinct_nonzero_roots(h) -> int:
    u = sympy.Symbol("u")
    poly = sympy.Poly(list(reversed(h)), u)
    sqf = sympy.quo(poly, sympy.gcd(poly, poly.diff(u)))
    return sqf.degree()


def singular_loci(w, F: WPolynomial, involution: int | None = None) -> list[QuotientSingularity]:
    w = as_weight(w)
    nv = F.nvars
    out = []
    for i in range(nv):
        if w[i] == 1:
            continue
        pure = any(e[i] > 0 and sum(e) == e[i] for e in F.exponents)
        if pure:
            continue
        k, l = _vertex_coordinates(F, i)
        n = w[i]
        q = _type(w, n, k, l)
        out.append(QuotientSingularity(
            VERTEX, (i,), (), 1, n, q, (k, l), chain_self_intersections(n, w[k] % n, w[l] % n),
            None if involution is None else False,
        ))
    for i in range(nv):
        for j in range(i + 1, nv):
            d = gcd(w[i], w[j])
            if d < 2:
                continue
            alpha, beta, h = edge_polynomial(F, i, j)
            if h is None:
                raise NotQuasiSmooth(f"edge x{i},x{j} lies in the surface")
            count = distinct_nonzero_roots(h)
            if count == 0:
                continue
            k, l = (m for m in range(nv) if m not in (i, j))
            q = _type(w, d, k, l)
            swapped = None
            if involution is not None:
                if involution == i:
                    swapped = beta % 2 == 1
                elif involution == j:
                    swapped = alpha % 2 == 1
                else:
                    swapped = False
            residual = tuple(e for _, e in F.restrict({m for m in range(nv) if m not in (i, j)}))
            out.append(QuotientSingularity(
                EDGE, (i, j), residual, count, d, q, (k, l),
                chain_self_intersections(d, w[k] % d, w[l] % d), swapped, tuple(h),
            ))
    return out


def exceptional_rank(w, F: WPolynomial) -> int:
    return sum(s.point_count * (len(s.chain)) for s in singular_loci(w, F))


def singularity_multiset(sings) -> dict[str, int]:
    out: dict[str, int] = {}
    for s in sings:
        out[s.label] = out.get(s.label, 0) + s.point_count
    return out


def point_groups(F: WPolynomial, sing: QuotientSingularity, syms):
    """Split the points of `sing` into classes and return membership tests.

    Yields (size, member) where member(component) counts the C-components
    of a fixed curve through each point of the class. Edge points are
    classed by the rational irreducible factors of the edge polynomial.
    """
    U = sing.support
    u = sympy.Symbol("u")

    def restrict(comp):
        if not set(U) <= set(comp.plane):
            return None
        zero = {syms[m]: 0 for m in comp.plane if m not in U}
        return sympy.expand(sympy.sympify(comp.factor).subs(zero))

    if sing.kind == VERTEX:
        def member(comp):
            r = restrict(comp)
            return comp.multiplicity if r == 0 else 0
        yield 1, member
        return
    i, j = U
    _, beta, h = edge_polynomial(F, i, j)
    hpoly = sympy.Poly(list(reversed(h)), u)
    for fac, _ in sympy.factor_list(hpoly)[1]:
        def member(comp, fac=fac):
            r = restrict(comp)
            if r is None:
                return 0
            if r == 0:
                return comp.multiplicity
            sub = WPolynomial(F.weight, *_terms_of(r, syms, F.nvars))
            _, _, hc = edge_polynomial(sub, i, j)
            hc_poly = sympy.Poly(list(reversed(hc)), u)
            return 1 if sympy.rem(hc_poly, fac).is_zero else 0
        yield fac.degree(), member


def _terms_of(expr, syms, n):
    poly = sympy.Poly(expr, *syms)
    coefs, exps = [], []
    for e, c in poly.terms():
        coefs.append(int(c))
        exps.append(tuple(e))
    return tuple(coefs), tuple(exps)
