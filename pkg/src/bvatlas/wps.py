"""Weighted projective spaces and weighted-homogeneous polynomials.

Everything here is exact integer/rational arithmetic. A polynomial is an
exponent matrix (one row per monomial) plus integer coefficients, tied to a
weight vector and a degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm

import sympy

# letters used when printing 4-variable polynomials, as in the tables
XYZW = ("x", "y", "z", "w")


@dataclass(frozen=True)
class Weight:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries or min(entries) < 1:
            raise ValueError(f"weight entries must be positive integers, got {self.entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def ambient_dim(self) -> int:
        return len(self.entries) - 1

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def is_normalized(self) -> bool:
        if len(self.entries) < 2:
            return self.entries == (1,)
        return all(
            reduce(gcd, sub) == 1
            for sub in combinations(self.entries, len(self.entries) - 1)
        )

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def as_weight(w) -> Weight:
    return w if isinstance(w, Weight) else Weight(tuple(w))


@dataclass(frozen=True)
class WPolynomial:
    weight: Weight
    coefficients: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]
    degree: int = field(default=0)

    def __post_init__(self):
        w = as_weight(self.weight)
        coefs = tuple(int(c) for c in self.coefficients)
        exps = tuple(tuple(int(e) for e in row) for row in self.exponents)
        if len(coefs) != len(exps):
            raise ValueError("coefficient and exponent counts differ")
        if not exps:
            raise ValueError("empty polynomial")
        if any(c == 0 for c in coefs):
            raise ValueError("coefficients must be nonzero")
        if len(set(exps)) != len(exps):
            raise ValueError("duplicate monomials")
        for row in exps:
            if len(row) != len(w) or min(row) < 0:
                raise ValueError(f"bad exponent row {row} for weight {w}")
        degrees = {sum(e * wi for e, wi in zip(row, w)) for row in exps}
        if len(degrees) != 1:
            raise ValueError(f"not weighted homogeneous for {w}: degrees {sorted(degrees)}")
        d = degrees.pop()
        if self.degree and self.degree != d:
            raise ValueError(f"declared degree {self.degree} but monomials have degree {d}")
        object.__setattr__(self, "weight", w)
        object.__setattr__(self, "coefficients", coefs)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", d)

    @property
    def nvars(self) -> int:
        return len(self.weight)

    @property
    def is_delsarte(self) -> bool:
        return len(self.exponents) == self.nvars

    def terms(self):
        return zip(self.coefficients, self.exponents)

    def exponent_set(self) -> frozenset:
        return frozenset(self.exponents)

    def support(self) -> set[int]:
        return {i for row in self.exponents for i, e in enumerate(row) if e}

    def restrict(self, zero: set[int]) -> list[tuple[int, tuple[int, ...]]]:
        """Terms surviving when the variables in `zero` are set to 0."""
        return [(c, e) for c, e in self.terms() if all(e[i] == 0 for i in zero)]

    def symbols(self):
        return sympy.symbols(f"x0:{self.nvars}")

    def to_sympy(self, syms=None):
        syms = syms or self.symbols()
        return sum(c * sympy.Mul(*[s**k for s, k in zip(syms, e)]) for c, e in self.terms())

    def evaluate_mod(self, point, p: int) -> int:
        total = 0
        for c, e in self.terms():
            term = c
            for x, k in zip(point, e):
                term = term * pow(x, k, p) % p
            total += term
        return total % p

    def sorted(self) -> "WPolynomial":
        pairs = sorted(zip(self.exponents, self.coefficients), reverse=True)
        return WPolynomial(self.weight, tuple(c for _, c in pairs), tuple(e for e, _ in pairs))

    def pretty(self, names=None) -> str:
        names = names or (XYZW if self.nvars == 4 else tuple(f"x{i}" for i in range(self.nvars)))
        return format_terms(list(self.terms()), names)

    def __str__(self):
        return self.pretty()


def format_terms(terms, names) -> str:
    out = []
    for c, e in terms:
        mono = "".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
        ) or "1"
        if c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{c}{mono}" if mono != "1" else str(c)
        out.append(s)
    text = "+".join(out).replace("+-", "-")
    return text


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*((?:[a-z]\d*(?:\^\d+)?)*)")
_FACTOR = re.compile(r"([a-z])(\d*)(?:\^(\d+))?")


def parse_polynomial(text: str, weight, names=None) -> WPolynomial:
    """Parse strings like ``x^2y+y^4-z^4+w^8`` or ``x0^2-x1^5``.

    Single letters x, y, z, w map to indices 0..3 unless `names` is given;
    indexed names like x0, z3 map to their index.
    """
    w = as_weight(weight)
    names = names or XYZW
    src = text.replace(" ", "").replace("*", "")
    pos = 0
    coefs, exps = [], []
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {src[pos:]!r}")
        sign, num, body = m.groups()
        pos = m.end()
        coef = int(num) if num else 1
        if sign == "-":
            coef = -coef
        exp = [0] * len(w)
        for fm in _FACTOR.finditer(body):
            letter, idx, power = fm.groups()
            i = int(idx) if idx else names.index(letter)
            exp[i] += int(power) if power else 1
        coefs.append(coef)
        exps.append(tuple(exp))
    return WPolynomial(w, tuple(coefs), tuple(exps))


def normalize_weight(w) -> Weight:
    """Divide out common factors until every entry-omitting subset is coprime."""
    e = list(as_weight(w).entries)
    g = reduce(gcd, e)
    e = [x // g for x in e]
    changed = True
    while changed:
        changed = False
        for i in range(len(e)):
            others = [x for j, x in enumerate(e) if j != i]
            if not others:
                continue
            d = reduce(gcd, others)
            if d > 1:
                e = [x if j == i else x // d for j, x in enumerate(e)]
                changed = True
    return Weight(tuple(e))


def monomials_of_degree(w, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors of weighted degree d, lexicographically ascending."""
    ws = as_weight(w).entries
    out: list[tuple[int, ...]] = []

    def rec(i, rest, prefix):
        if i == len(ws) - 1:
            if rest % ws[i] == 0:
                out.append(tuple(prefix + [rest // ws[i]]))
            return
        for k in range(rest // ws[i] + 1):
            rec(i + 1, rest - k * ws[i], prefix + [k])

    if d >= 0:
        rec(0, d, [])
    return sorted(out)


class NotReducible(ValueError):
    """A monomial does not descend to the normalized weight."""


def reduce_curve_model(w3, f: WPolynomial) -> tuple[Weight, WPolynomial, int]:
    """Normalize a curve model, substituting exponents along the way.

    When the weights other than w_i share a factor d coprime to w_i, the
    substitution x_i^d -> x_i divides every x_i exponent and the degree by d.
    """
    w = list(as_weight(w3).entries)
    if len(w) != 3:
        raise ValueError("reduce_curve_model expects a weight with 3 entries")
    exps = [list(e) for e in f.exponents]
    deg = f.degree
    g = reduce(gcd, w)
    if g > 1:
        w = [x // g for x in w]
        if deg % g:
            raise NotReducible(f"degree {deg} not divisible by {g}")
        deg //= g
    changed = True
    while changed:
        changed = False
        for i in range(3):
            d = gcd(*[x for j, x in enumerate(w) if j != i])
            if d > 1:
                for e in exps:
                    if e[i] % d:
                        raise NotReducible(f"exponent {e[i]} of x{i} not divisible by {d}")
                for e in exps:
                    e[i] //= d
                w = [x if j == i else x // d for j, x in enumerate(w)]
                deg //= d
                changed = True
    nw = Weight(tuple(w))
    return nw, WPolynomial(nw, f.coefficients, tuple(map(tuple, exps))), deg


def exponent_matrix(F: WPolynomial) -> sympy.Matrix:
    return sympy.Matrix([list(e) for e in F.exponents])


def transpose_exponents(F: WPolynomial) -> tuple[WPolynomial, Weight]:
    """Berglund-Huebsch transpose: transpose the exponent matrix, unit coefficients."""
    if not F.is_delsarte:
        raise ValueError("transpose needs a square exponent matrix")
    A = exponent_matrix(F)
    if A.det() == 0:
        raise ValueError("exponent matrix is not invertible")
    At = A.T
    # weight solving At * w = d * 1, scaled to smallest positive integers
    sol = At.LUsolve(sympy.ones(At.rows, 1))
    fr = [Fraction(int(x.p), int(x.q)) for x in sol]
    den = lcm(*[x.denominator for x in fr])
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, ints)
    ints = [x // g for x in ints]
    if min(ints) <= 0:
        raise ValueError("transposed system has no positive weight")
    nw = Weight(tuple(ints))
    rows = tuple(tuple(int(x) for x in At.row(i)) for i in range(At.rows))
    return WPolynomial(nw, (1,) * len(rows), rows), nw


def fermat_cover_degree(F: WPolynomial) -> int:
    """Smallest m with m * A^{-1} integral (A the exponent matrix)."""
    if not F.is_delsarte:
        raise ValueError("Fermat cover degree needs a Delsarte polynomial")
    A = exponent_matrix(F)
    if A.det() == 0:
        raise ValueError("exponent matrix is not invertible")
    inv = A.inv()
    return int(lcm(*[int(sympy.fraction(x)[1]) for x in inv]))


def diagonal_exponents(F: WPolynomial) -> list[int] | None:
    """Exponents m_i if F = sum c_i x_i^{m_i}, else None."""
    if not F.is_delsarte:
        return None
    ms = [0] * F.nvars
    for e in F.exponents:
        nz = [i for i, k in enumerate(e) if k]
        if len(nz) != 1 or ms[nz[0]]:
            return None
        ms[nz[0]] = e[nz[0]]
    return ms


@dataclass(frozen=True)
class K3Record:
    yonemura_id: int
    weight: Weight
    equation: WPolynomial | None
    borcea_id: int | None = None
    involution_variable: int | None = None
    expected_r: int | None = None
    expected_a: int | None = None
    source_table: int = 0
    mirror_ids: tuple[int, ...] | None = None
    notes: str = ""

    def __post_init__(self):
        if self.equation is not None and self.equation.degree != self.weight.total:
            raise ValueError(
                f"#{self.yonemura_id}: degree {self.equation.degree} != weight sum {self.weight.total}"
            )

    @property
    def expected(self):
        if self.expected_r is None:
            return None
        return (self.expected_r, self.expected_a)

    @property
    def is_borcea(self) -> bool:
        return self.borcea_id is not None
