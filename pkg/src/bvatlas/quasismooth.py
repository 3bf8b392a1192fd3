"""Quasi-smoothness of weighted hypersurfaces.

Three independent deciders:

* ``combinatorial_form_check``: the classical sufficient condition, each
  variable's monomials must take one of four shapes.
* ``quasismooth_exact``: stratify the affine cone by which coordinates are
  nonzero and decide whether the gradient has a zero on each torus stratum.
* ``quasismooth_fp_probe``: exhaustive search for singular points of the cone
  over a small prime field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np
import sympy

from .wps import WPolynomial

FORMS = (
    "x_i^n",
    "x_i^n x_j",
    "x_i^n + x_i x_j^m",
    "x_i^n x_k + x_i x_j^m",
)
OTHER = "other"
UNTOUCHED = "untouched"

MAX_EXACT_MONOMIALS = 6
MAX_PROBE_POINTS = 10**9
DEFAULT_PROBE_PRIMES = (7, 11, 13, 17)


class Unsupported(ValueError):
    pass


@dataclass
class QuasiSmoothVerdict:
    combinatorial_pass: bool
    forms: list[str]
    exact_pass: bool | None = None
    probe_results: list[tuple[int, bool]] = field(default_factory=list)

    @property
    def diagnostics(self) -> list[str]:
        return [
            f"x{i}: untouched variable" if f == UNTOUCHED else f"x{i}: no allowed form"
            for i, f in enumerate(self.forms)
            if f in (UNTOUCHED, OTHER)
        ]


def _pure_power(e, i) -> bool:
    return e[i] >= 1 and all(k == 0 for j, k in enumerate(e) if j != i)


def _power_times(e, i) -> int | None:
    """j if e = x_i^n x_j with j != i, else None."""
    if e[i] < 1:
        return None
    others = [j for j, k in enumerate(e) if j != i and k]
    if len(others) == 1 and e[others[0]] == 1:
        return others[0]
    return None


def variable_form(exponents, i: int) -> str:
    rows = [e for e in exponents if e[i] > 0]
    if not rows:
        return UNTOUCHED
    if len(rows) == 1:
        e = rows[0]
        if _pure_power(e, i):
            return FORMS[0]
        if _power_times(e, i) is not None:
            return FORMS[1]
        return OTHER
    if len(rows) == 2:
        for a, b in (rows, rows[::-1]):
            # b must be x_i * x_j^m
            if b[i] != 1:
                continue
            bj = [j for j, k in enumerate(b) if j != i and k]
            if len(bj) != 1:
                continue
            j = bj[0]
            if _pure_power(a, i):
                return FORMS[2]
            # k == j allowed: x_i^n x_j + x_i x_j^m is a two-variable loop
            if _power_times(a, i) is not None:
                return FORMS[3]
    return OTHER


def combinatorial_form_check(F) -> QuasiSmoothVerdict:
    """Sufficient criterion; accepts a WPolynomial or a raw list of exponent rows."""
    exps = F.exponents if isinstance(F, WPolynomial) else [tuple(e) for e in F]
    forms = [variable_form(exps, i) for i in range(len(exps[0]))]
    return QuasiSmoothVerdict(all(f in FORMS for f in forms), forms)


def has_pointing_monomials(exponents) -> bool:
    """Necessary condition: every x_i has some x_i^a or x_i^a x_j."""
    n = len(exponents[0])
    return all(
        any(_pure_power(e, i) or _power_times(e, i) is not None for e in exponents)
        for i in range(n)
    )


# ---------------------------------------------------------------- exact check


def integer_left_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Z-basis of {n : sum n_k rows[k] = 0} via unimodular row reduction."""
    r = len(rows)
    if r == 0:
        return []
    c = len(rows[0])
    aug = [list(rows[k]) + [1 if j == k else 0 for j in range(r)] for k in range(r)]
    pivot_row = 0
    for col in range(c):
        while True:
            nz = [k for k in range(pivot_row, r) if aug[k][col] != 0]
            if not nz:
                break
            k0 = min(nz, key=lambda k: abs(aug[k][col]))
            aug[pivot_row], aug[k0] = aug[k0], aug[pivot_row]
            done = True
            for k in range(pivot_row + 1, r):
                if aug[k][col]:
                    q = aug[k][col] // aug[pivot_row][col]
                    aug[k] = [a - q * b for a, b in zip(aug[k], aug[pivot_row])]
                    if aug[k][col]:
                        done = False
            if done:
                pivot_row += 1
                break
        if pivot_row == r:
            break
    return [row[c:] for row in aug[pivot_row:] if all(v == 0 for v in row[:c])]


def _stratum_blocks(F: WPolynomial, S: tuple[int, ...]):
    """Gradient equations on the torus of the stratum with support S.

    Returns a list of blocks (monomials, equation rows). Monomials are
    exponent tuples; each row lists one coefficient per monomial.
    """
    Sset = set(S)
    n = F.nvars
    blocks = []
    base = [(c, e) for c, e in F.terms() if all(e[i] == 0 for i in range(n) if i not in Sset)]
    if base:
        mons = [e for _, e in base]
        rows = [[c * e[j] for c, e in base] for j in S]
        blocks.append((mons, rows))
    for j in range(n):
        if j in Sset:
            continue
        terms = []
        for c, e in F.terms():
            if e[j] != 1:
                continue
            if all(e[i] == 0 for i in range(n) if i != j and i not in Sset):
                shifted = tuple(k - (1 if i == j else 0) for i, k in enumerate(e))
                terms.append((c, shifted))
        if terms:
            blocks.append(([e for _, e in terms], [[c for c, _ in terms]]))
    return blocks


def _torus_solution_exists(F: WPolynomial, S, blocks) -> bool:
    if not blocks:
        return True
    ratio_rows, ratio_vals = [], []
    needs_groebner = False
    for mons, rows in blocks:
        if any(sum(1 for v in row if v) == 1 for row in rows):
            return False
        M = sympy.Matrix(rows)
        null = M.nullspace()
        if not null:
            return False
        for idx in range(len(mons)):
            if all(vec[idx] == 0 for vec in null):
                return False
        if len(null) > 1:
            needs_groebner = True
            continue
        v = [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in null[0]]
        f0 = mons[0]
        for f, val in zip(mons[1:], v[1:]):
            ratio_rows.append([f[i] - f0[i] for i in S])
            ratio_vals.append(val / v[0])
    if needs_groebner:
        return _groebner_has_solution(F, S)
    for nvec in integer_left_kernel(ratio_rows):
        prod = Fraction(1)
        for k, b in zip(nvec, ratio_vals):
            if k:
                prod *= b**k
        if prod != 1:
            return False
    return True


def _groebner_has_solution(F: WPolynomial, S) -> bool:
    xs = F.symbols()
    expr = F.to_sympy(xs)
    zero = {xs[i]: 0 for i in range(F.nvars) if i not in S}
    eqs = [sympy.expand(sympy.diff(expr, xs[j]).subs(zero)) for j in range(F.nvars)]
    # scale the first surviving coordinate to 1 using the weighted torus action
    eqs = [sympy.expand(e.subs(xs[S[0]], 1)) for e in eqs]
    free = [xs[i] for i in S[1:]]
    t = sympy.Symbol("_sat")
    eqs = [e for e in eqs if e != 0]
    eqs.append(t * sympy.Mul(*free) - 1 if free else t - 1)
    G = sympy.groebner(eqs, *free, t, order="grevlex")
    return not (len(G.exprs) == 1 and G.exprs[0] == 1)


def singular_strata(F: WPolynomial) -> list[tuple[int, ...]]:
    """Supports S whose torus carries a singular point of the affine cone."""
    if len(F.exponents) > MAX_EXACT_MONOMIALS:
        raise Unsupported(f"{len(F.exponents)} monomials; exact check handles at most {MAX_EXACT_MONOMIALS}")
    out = []
    for size in range(1, F.nvars + 1):
        for S in combinations(range(F.nvars), size):
            if _torus_solution_exists(F, S, _stratum_blocks(F, S)):
                out.append(S)
    return out


def quasismooth_exact(F: WPolynomial) -> bool:
    if len(F.exponents) > MAX_EXACT_MONOMIALS:
        raise Unsupported(f"{len(F.exponents)} monomials; exact check handles at most {MAX_EXACT_MONOMIALS}")
    for size in range(1, F.nvars + 1):
        for S in combinations(range(F.nvars), size):
            if _torus_solution_exists(F, S, _stratum_blocks(F, S)):
                return False
    return True


# ------------------------------------------------------------------ F_p probe


def good_probe_prime(F: WPolynomial, p: int) -> bool:
    """p divides no coefficient of F or of any partial derivative."""
    return all(c * k % p for c, e in F.terms() for k in e if k)


def quasismooth_fp_probe(F: WPolynomial, p: int) -> bool:
    """True iff no nonzero F_p-point of the cone is a common zero of F and its partials."""
    if p < 3 or any(c % p == 0 for c in F.coefficients):
        raise ValueError(f"probe prime {p} must be >= 3 and coprime to the coefficients")
    n = F.nvars
    if p**n > MAX_PROBE_POINTS:
        raise ValueError(f"search space {p}^{n} exceeds {MAX_PROBE_POINTS}")
    maxexp = max(max(e) for e in F.exponents)
    powers = np.ones((maxexp + 1, p), dtype=np.int64)
    base = np.arange(p, dtype=np.int64)
    for k in range(1, maxexp + 1):
        powers[k] = powers[k - 1] * base % p
    # partial derivative j: sum over terms with e_j > 0 of c*e_j * x^(e - u_j)
    polys = [[(c % p, e) for c, e in F.terms()]]
    for j in range(n):
        terms = []
        for c, e in F.terms():
            if e[j]:
                d = list(e)
                d[j] -= 1
                terms.append((c * e[j] % p, tuple(d)))
        polys.append(terms)
    rest = np.indices((p,) * (n - 1)).reshape(n - 1, -1) if n > 1 else np.zeros((0, 1), dtype=np.int64)
    for x0 in range(p):
        coords = [np.full(rest.shape[1], x0, dtype=np.int64)] + [rest[i] for i in range(n - 1)]
        bad = np.ones(rest.shape[1], dtype=bool)
        if x0 == 0:
            bad[0] = False  # the origin
        for terms in polys:
            val = np.zeros(rest.shape[1], dtype=np.int64)
            for c, e in terms:
                mono = np.full(rest.shape[1], c, dtype=np.int64)
                for i, k in enumerate(e):
                    if k:
                        mono = mono * powers[k][coords[i]] % p
                val = (val + mono) % p
            bad &= val == 0
            if not bad.any():
                break
        if bad.any():
            return False
    return True


def verdict(F: WPolynomial, primes=DEFAULT_PROBE_PRIMES) -> QuasiSmoothVerdict:
    v = combinatorial_form_check(F)
    try:
        v.exact_pass = quasismooth_exact(F)
    except Unsupported:
        v.exact_pass = None
    for p in primes:
        if good_probe_prime(F, p) and p ** F.nvars <= MAX_PROBE_POINTS:
            v.probe_results.append((p, quasismooth_fp_probe(F, p)))
    return v
