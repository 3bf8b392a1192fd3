"""Borcea-Voisin threefolds (E x S)/(iota x sigma): Hodge data and twist models."""

from __future__ import annotations

from dataclasses import dataclass

from .nikulin import NikulinInvariants, mirror_triplet
from .wps import Weight, WPolynomial, as_weight

E2, E3 = "E2", "E3"

# models whose twist uses a square-root substitution; stored as given
SPECIAL_MODELS = {
    2: ((3, 3, 8, 6, 4), "(z0^4+z1^4)^2+z2^3+z3^4+z4^6"),
    52: ((9, 9, 24, 16, 14), "(z0^4+z1^4)^2+z2^3+z2z3^3+z3z4^4"),
    84: ((5, 5, 18, 14, 12), "z3(z0^4+z1^4)^2+z2^3+z2z4^3+z3^3z4"),
}


class HodgeInconsistency(ArithmeticError):
    pass


class Unsupported(ValueError):
    pass


@dataclass(frozen=True)
class BVHodge:
    h11: int
    h21: int
    euler: int
    r: int
    a: int
    g: int
    k: int

    @property
    def N(self) -> int:
        return self.k + 1

    @property
    def Nprime(self) -> int:
        return self.g

    def swapped(self) -> "BVHodge":
        return BVHodge(self.h21, self.h11, -self.euler, 20 - self.r, self.a, self.g, self.k)


def hodge_numbers(r: int, a: int) -> BVHodge:
    inv = NikulinInvariants(r, a)
    if (r, a) == (10, 10):
        # empty fixed locus: only the untwisted sector survives
        return BVHodge(11, 11, 0, r, a, 0, -1)
    g, k = inv.g, inv.k
    N, Np = k + 1, g
    h11 = {5 + 3 * r - 2 * a, 1 + r + 4 * (k + 1), 11 + 5 * N - Np}
    h21 = {65 - 3 * r - 2 * a, 1 + (20 - r) + 4 * g, 11 + 5 * Np - N}
    if len(h11) != 1 or len(h21) != 1:
        raise HodgeInconsistency(f"formula families disagree for (r,a)=({r},{a}): {h11}, {h21}")
    h11v, h21v = h11.pop(), h21.pop()
    e = 2 * (h11v - h21v)
    if e != 12 * (N - Np) or e != 12 * (r - 10):
        raise HodgeInconsistency(f"Euler characteristic mismatch for ({r},{a})")
    return BVHodge(h11v, h21v, e, r, a, g, k)


def hodge_from_fixed_locus(g: int, k: int) -> BVHodge:
    return hodge_numbers(11 - g + k, 11 - g - k)


def orbifold_hodge(g: int, k: int, r: int) -> BVHodge:
    """Untwisted sector (1+r, 1+20-r) plus four copies of S^sigma."""
    if r != 11 - g + k:
        raise ValueError(f"inconsistent (g,k,r)=({g},{k},{r})")
    h11 = (1 + r) + 4 * (k + 1)
    h21 = (1 + 20 - r) + 4 * g
    out = BVHodge(h11, h21, 2 * (h11 - h21), r, 11 - g - k, g, k)
    ref = hodge_numbers(r, out.a)
    if (ref.h11, ref.h21) != (h11, h21):
        raise HodgeInconsistency(f"orbifold count {h11, h21} != {ref.h11, ref.h21}")
    return out


@dataclass(frozen=True)
class TwistModel:
    weight5: Weight
    equation: WPolynomial | None
    degree: int
    curve: str
    quasi_smooth: bool = True
    text: str = ""


def _split_x0(F: WPolynomial):
    """(i, f-terms): i is None for x0^2 = f, else the x0^2 x_i partner index."""
    lead = [(c, e) for c, e in F.terms() if e[0]]
    if len(lead) != 1 or lead[0][1][0] != 2:
        raise Unsupported("twist map needs x0 to appear only in x0^2 or x0^2 x_i")
    e = lead[0][1]
    rest = [j for j in range(1, 4) if e[j]]
    if sum(e) == 2:
        i = None
    elif len(rest) == 1 and e[rest[0]] == 1:
        i = rest[0]
    else:
        raise Unsupported("twist map needs x0 to appear only in x0^2 or x0^2 x_i")
    sign = lead[0][0]
    f = [(c * sign, e) for c, e in F.terms() if not e[0]]
    return i, f


def twist_model(w, F: WPolynomial, curve: str, record_id: int | None = None) -> TwistModel:
    from .wps import parse_polynomial

    w = as_weight(w)
    if record_id in SPECIAL_MODELS and not any(e[0] == 2 and sum(e) == 2 for e in F.exponents):
        wt, text = SPECIAL_MODELS[record_id]
        if curve != E2:
            raise Unsupported(f"#{record_id} only has the E2 model")
        ww = Weight(wt)
        return TwistModel(ww, None, ww.total, E2, True, text)
    w0 = w[0]
    if w0 % 6 == 0:
        raise Unsupported(f"w0 = {w0} is divisible by 6; no explicit twist map is known")
    if curve == E2 and w0 % 2 == 0:
        raise Unsupported("E2 needs w0 odd")
    if curve == E3 and (w0 % 2 or w0 % 3 == 0):
        raise Unsupported("E3 needs w0 even and prime to 3")
    if curve not in (E2, E3):
        raise ValueError(f"unknown curve {curve}")
    i, f = _split_x0(F)
    if curve == E2:
        wt = (w0, w0, 2 * w[1], 2 * w[2], 2 * w[3])
        lead = [(1, (4, 0, 0, 0, 0)), (1, (0, 4, 0, 0, 0))]
    else:
        wt = (2 * w0, w0, 3 * w[1], 3 * w[2], 3 * w[3])
        lead = [(1, (3, 0, 0, 0, 0)), (1, (0, 6, 0, 0, 0))]
    if i is not None:
        lead = [(c, tuple(x + (1 if k == i + 1 else 0) for k, x in enumerate(e))) for c, e in lead]
    terms = lead + [(c, (0, 0) + e[1:]) for c, e in f]
    eq = WPolynomial(Weight(wt), tuple(c for c, _ in terms), tuple(e for _, e in terms))
    assert eq.degree == sum(wt), "twist model is not Calabi-Yau"
    names = tuple(f"z{k}" for k in range(5))
    return TwistModel(Weight(wt), eq, eq.degree, curve, i is None, eq.pretty(names))


def mirror_hodge_check(t: NikulinInvariants) -> tuple[BVHodge, BVHodge]:
    res = mirror_triplet(t)
    if res.mirror is None:
        raise ValueError(f"no mirror: {res.reason}")
    X = hodge_numbers(t.r, t.a)
    Xv = hodge_numbers(res.mirror.r, res.mirror.a)
    if (Xv.h11, Xv.h21, Xv.euler) != (X.h21, X.h11, -X.euler):
        raise HodgeInconsistency("mirror does not swap Hodge numbers")
    return X, Xv
