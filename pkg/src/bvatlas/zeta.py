"""Characters, weighted Jacobi sums, Fermat motives and point counts over finite fields."""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce

import mpmath
import numpy as np
import sympy

from .wps import WPolynomial, as_weight, diagonal_exponents


class Unsupported(ValueError):
    pass


class TraceMismatch(ArithmeticError):
    pass


def _lcm(values) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


def multiplicative_order(p: int, m: int) -> int:
    if math.gcd(p, m) != 1:
        raise ValueError(f"{p} is not a unit mod {m}")
    return int(sympy.n_order(p, m)) if m > 1 else 1


# -- cyclotomic integers ------------------------------------------------------

@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    x = sympy.Symbol("x")
    return tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()))


def _reduce(coeffs, m: int) -> tuple[int, ...]:
    phi = _cyclotomic(m)
    d = len(phi) - 1
    c = [0] * m
    for i, v in enumerate(coeffs):
        c[i % m] += int(v)
    for k in range(m - 1, d - 1, -1):
        t = c[k]
        if t:
            for j in range(d + 1):
                c[k - d + j] -= t * phi[j]
    return tuple(c[:d])


class CyclotomicInteger:
    """Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        self.m = m
        self.coeffs = _reduce(coeffs, m)

    @classmethod
    def integer(cls, m: int, n: int) -> "CyclotomicInteger":
        return cls(m, [n])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CyclotomicInteger":
        c = [0] * m
        c[k % m] = 1
        return cls(m, c)

    def _coerce(self, other):
        if isinstance(other, int):
            return CyclotomicInteger.integer(self.m, other)
        if other.m != self.m:
            raise ValueError("different cyclotomic rings")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicInteger(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        prod = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CyclotomicInteger(self.m, prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.integer(self.m, other)
        return isinstance(other, CyclotomicInteger) and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def galois(self, t: int) -> "CyclotomicInteger":
        """sigma_t: zeta -> zeta^t."""
        if math.gcd(t, self.m) != 1:
            raise ValueError(f"{t} is not a unit mod {self.m}")
        c = [0] * self.m
        for j, a in enumerate(self.coeffs):
            c[(j * t) % self.m] += a
        return CyclotomicInteger(self.m, c)

    def conjugate(self) -> "CyclotomicInteger":
        return self.galois(-1)

    def embeddings(self) -> list[complex]:
        out = []
        for k in range(1, self.m + 1):
            if math.gcd(k, self.m) == 1:
                z = [np.exp(2j * np.pi * j * k / self.m) for j in range(len(self.coeffs))]
                out.append(complex(sum(a * zj for a, zj in zip(self.coeffs, z))))
        return out

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def __repr__(self):
        terms = [f"{a}*z^{j}" if j else str(a) for j, a in enumerate(self.coeffs) if a]
        return f"Z[zeta_{self.m}]({' + '.join(terms) or '0'})"


# -- finite fields and characters ---------------------------------------------

def _irreducible(p: int, f: int) -> tuple[int, ...]:
    """Monic irreducible of degree f <= 3 over F_p, ascending coefficients."""
    if f == 1:
        return (0, 1)
    if f > 3:
        raise Unsupported("extension degree above 3")
    for tail in itertools.product(range(p), repeat=f):
        if tail[0] == 0:
            continue
        poly = tail + (1,)
        if all(sum(c * pow(x, k, p) for k, c in enumerate(poly)) % p for x in range(p)):
            return poly
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    """F_q, q = p^f; elements are indices sum d_k p^k over a polynomial basis."""

    def __init__(self, p: int, f: int = 1):
        if not sympy.isprime(p):
            raise ValueError(f"{p} is not prime")
        self.p, self.f, self.q = p, f, p**f
        self.modulus = _irreducible(p, f)
        self.powers = p ** np.arange(f)
        self.digits = (np.arange(self.q)[:, None] // self.powers) % p
        g = self._generator()
        self.exp = np.empty(self.q - 1, dtype=np.int64)
        self.log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for k in range(self.q - 1):
            self.exp[k] = x
            self.log[x] = k
            x = self._mul(x, g)
        self.generator = g

    def _mul(self, a: int, b: int) -> int:
        p, f = self.p, self.f
        if f == 1:
            return a * b % p
        da, db = self.digits[a], self.digits[b]
        prod = [0] * (2 * f - 1)
        for i in range(f):
            for j in range(f):
                prod[i + j] += int(da[i]) * int(db[j])
        for k in range(2 * f - 2, f - 1, -1):
            t = prod[k]
            for j in range(f + 1):
                prod[k - f + j] -= t * self.modulus[j]
        return sum((prod[k] % p) * p**k for k in range(f))

    def _pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul(out, a)
            a = self._mul(a, a)
            e >>= 1
        return out

    def _generator(self) -> int:
        n = self.q - 1
        primes = list(sympy.factorint(n))
        for g in range(2, self.q):
            if all(self._pow(g, n // l) != 1 for l in primes):
                return g
        return 1  # q == 2

    def encode(self, digits) -> np.ndarray:
        return (np.asarray(digits) % self.p) @ self.powers

    def from_int(self, c: int) -> int:
        return int(c) % self.p


@dataclass(frozen=True)
class CharTable:
    """chi of exact order m on F_q^x with chi(generator) = zeta_m; chi(0) = 0."""

    field: FiniteField
    m: int

    def exponent(self, x: int) -> int:
        if x == 0:
            raise ValueError("chi(0) = 0 has no exponent")
        return int(self.field.log[x]) % self.m

    def __call__(self, x: int) -> CyclotomicInteger:
        if x == 0:
            return CyclotomicInteger.integer(self.m, 0)
        return CyclotomicInteger.zeta(self.m, self.exponent(x))


@lru_cache(maxsize=64)
def _char_table(p: int, m: int, f: int = 1) -> CharTable:
    K = FiniteField(p, f)
    if (K.q - 1) % m:
        raise Unsupported(f"{m} does not divide {K.q} - 1")
    return CharTable(K, m)


def char_structure(p: int, m: int) -> CharTable:
    if (p - 1) % m:
        raise Unsupported(f"p = {p} is not 1 mod {m}; only split primes are handled")
    return _char_table(p, m, 1)


# -- Jacobi sums and motives --------------------------------------------------

@dataclass(frozen=True)
class CharVector:
    m: int
    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(x) % self.m for x in self.entries)
        if len(e) < 2:
            raise ValueError("need at least two entries")
        if any(x == 0 for x in e):
            raise ValueError(f"entries must be nonzero mod {self.m}: {self.entries}")
        if sum(e) % self.m:
            raise ValueError(f"entries must sum to 0 mod {self.m}: {self.entries}")
        object.__setattr__(self, "entries", e)

    @property
    def n(self) -> int:
        return len(self.entries) - 2

    def scaled(self, t: int) -> "CharVector":
        return CharVector(self.m, tuple(t * x for x in self.entries))

    @property
    def length(self) -> int:
        return sum(self.entries) // self.m - 1

    def is_weighted(self, weights) -> bool:
        return all(x % w == 0 for x, w in zip(self.entries, weights))


def jacobi_sum(p: int, a: CharVector, f: int = 1) -> CyclotomicInteger:
    """(-1)^n sum of prod chi(v_i)^a_i over 1 + v_1 + ... + v_{n+1} = 0 in F_{p^f}."""
    if f == 1:
        T = char_structure(p, a.m)
    else:
        T = _char_table(p, a.m, f)
    K = T.field
    n = a.n
    if (K.q - 1) ** n > 5 * 10**7:
        raise ValueError("Jacobi sum too large for direct summation")
    rest = a.entries[1:]
    nz = np.arange(1, K.q)
    grids = [g.ravel() for g in np.meshgrid(*([nz] * n), indexing="ij")] if n else []
    size = grids[0].size if grids else 1
    total = np.zeros((size, K.f), dtype=np.int64)
    total[:, 0] = 1
    e = np.zeros(size, dtype=np.int64)
    for ai, v in zip(rest, grids):
        total += K.digits[v]
        e += ai * K.log[v]
    last = K.encode(-total)
    keep = last != 0
    e = (e[keep] + rest[-1] * K.log[last[keep]]) % a.m
    counts = np.bincount(e, minlength=a.m)
    sign = -1 if n % 2 else 1
    return CyclotomicInteger(a.m, [sign * int(c) for c in counts])


@dataclass(frozen=True)
class MotiveOrbit:
    orbit: tuple[CharVector, ...]
    lengths: tuple[int, ...]
    hodge: dict
    algebraic: bool

    @property
    def size(self) -> int:
        return len(self.orbit)

    @property
    def representative(self) -> CharVector:
        return self.orbit[0]


def weighted_vectors(m: int, n: int, weights=None) -> list[CharVector]:
    steps = list(weights) if weights is not None else [1] * (n + 2)
    if len(steps) != n + 2 or any(m % s for s in steps):
        raise ValueError(f"weights {weights} must be n+2 divisors of {m}")
    ranges = [range(s, m, s) for s in steps]
    return [CharVector(m, a) for a in itertools.product(*ranges) if sum(a) % m == 0]


def enumerate_motives(m: int, n: int, weights=None) -> list[MotiveOrbit]:
    units = [t for t in range(1, m) if math.gcd(t, m) == 1] or [1]
    seen = set()
    out = []
    for a in weighted_vectors(m, n, weights):
        if a in seen:
            continue
        orbit = sorted({a.scaled(t) for t in units}, key=lambda v: v.entries)
        seen.update(orbit)
        lengths = tuple(v.length for v in orbit)
        hodge = Counter((l, n - l) for l in lengths)
        algebraic = n % 2 == 0 and all(l == n // 2 for l in lengths)
        out.append(MotiveOrbit(tuple(orbit), lengths, dict(hodge), algebraic))
    return out


def _diagonal_data(F: WPolynomial):
    exps = diagonal_exponents(F)
    if exps is None:
        raise Unsupported("equation is not diagonal")
    coefs = [0] * F.nvars
    for c, e in F.terms():
        coefs[next(i for i, x in enumerate(e) if x)] = c
    return exps, coefs


def _twisted_sums(F: WPolynomial, p: int, f: int, vectors):
    """{a: chi(c)^(-a) j_q(a)}; one Jacobi sum per Galois orbit."""
    exps, coefs = _diagonal_data(F)
    m = _lcm(exps)
    T = _char_table(p, m, f) if f > 1 else char_structure(p, m)
    logs = [T.exponent(T.field.from_int(c)) for c in coefs]
    units = [t for t in range(1, m) if math.gcd(t, m) == 1] or [1]
    known = {}  # a -> (t, representative)
    reps = {}
    out = {}
    for a in vectors:
        if a in known:
            t, rep = known[a]
            j = reps[rep].galois(t)
        else:
            j = reps[a] = jacobi_sum(p, a, f)
            for t in units:
                known.setdefault(a.scaled(t), (t, a))
        twist = -sum(ai * li for ai, li in zip(a.entries, logs))
        out[a] = CyclotomicInteger.zeta(m, twist) * j
    return out


def count_points_charsum(w, F: WPolynomial, p: int) -> int:
    w = as_weight(w)
    exps, _ = _diagonal_data(F)
    m = _lcm(exps)
    if (p - 1) % m:
        raise Unsupported(f"p = {p} is not 1 mod {m}")
    if any(c % p == 0 for c in F.coefficients):
        raise ValueError(f"p = {p} divides a coefficient")
    n = F.nvars - 2
    vectors = weighted_vectors(m, n, [m // e for e in exps])
    total = CyclotomicInteger.integer(m, 0)
    for v in _twisted_sums(F, p, 1, vectors).values():
        total = total + v
    main = sum(p**i for i in range(n + 1))
    return main + (-1) ** n * total.to_int()


def count_points_bruteforce(w, F: WPolynomial, p: int, limit: int = 10**9) -> int:
    """#{x != 0 : F(x) = 0 mod p} / (p - 1)."""
    N = F.nvars
    if p**N > limit:
        raise ValueError(f"{p}^{N} exceeds the brute-force limit")
    if any(c % p == 0 for c in F.coefficients):
        raise ValueError(f"p = {p} divides a coefficient")
    xs = np.arange(p, dtype=np.int64)
    maxe = max(max(e) for e in F.exponents)
    table = np.ones((maxe + 1, p), dtype=np.int64)
    for k in range(1, maxe + 1):
        table[k] = table[k - 1] * xs % p
    k_in = min(N, 3)
    inner_axes = np.meshgrid(*([xs] * k_in), indexing="ij")
    inner = np.empty((len(F.exponents), p**k_in), dtype=np.int64)
    for t, (c, e) in enumerate(F.terms()):
        v = np.full(inner_axes[0].shape, c % p, dtype=np.int64)
        for ax, k in zip(inner_axes, e[N - k_in:]):
            v = v * table[k][ax] % p
        inner[t] = v.ravel()
    zeros = 0
    for outer in itertools.product(range(p), repeat=N - k_in):
        coeff = np.array([
            math.prod(int(table[k][x]) for x, k in zip(outer, e[:N - k_in])) % p
            for e in F.exponents
        ], dtype=np.int64)
        zeros += int(np.count_nonzero((coeff @ inner) % p == 0))
    zeros -= 1
    q, r = divmod(zeros, p - 1)
    if r:
        raise AssertionError(f"cone count {zeros} not divisible by {p - 1}")
    return q


def _polymul(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += int(x) * int(y)
    return out


# -- singularities over F_p ----------------------------------------------------

def _edge_factor_degrees(h, p: int) -> list[int]:
    """Degrees of the distinct irreducible factors of h(u) over F_p, u != 0."""
    u = sympy.Symbol("u")
    poly = sympy.Poly(list(reversed(h)), u, modulus=p)
    out = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1 and fac.eval(0) == 0:
            continue
        out.append(fac.degree())
    return out


def resolution_correction(sings, p: int) -> int:
    """Points added by the exceptional chains over F_p-rational singular points."""
    delta = 0
    for s in sings:
        length = len(s.chain)
        if s.kind == "vertex":
            delta += length * p
            continue
        if not s.edge_h:
            raise ValueError(f"no edge polynomial recorded for {s.label} on {s.stratum}")
        rational = sum(1 for d in _edge_factor_degrees(s.edge_h, p) if d == 1)
        delta += rational * length * p
    return delta


def _exceptional_polynomial(sings, p: int) -> list[int]:
    """prod over Frobenius orbits of singular points of (1 - (pt)^k)^(chain length)."""
    poly = [1]
    for s in sings:
        degrees = [1] if s.kind == "vertex" else _edge_factor_degrees(s.edge_h, p)
        for k in degrees:
            factor = [1] + [0] * (k - 1) + [-(p**k)]
            for _ in range(len(s.chain)):
                poly = _polymul(poly, factor)
    return poly


# -- Euler factors -------------------------------------------------------------

@dataclass(frozen=True)
class EulerFactor:
    prime: int
    coefficients: tuple[int, ...]
    weight: int

    def __post_init__(self):
        c = tuple(int(x) for x in self.coefficients)
        if not c or c[0] != 1:
            raise ValueError("Euler factor must have constant term 1")
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coefficients))

    def reciprocal_roots(self, dps: int = 50) -> list:
        y = sympy.Symbol("y")
        rev = sympy.Poly(list(self.coefficients), y)
        roots = []
        with mpmath.workdps(dps):
            for fac, mult in rev.factor_list()[1]:
                cs = [int(c) for c in fac.all_coeffs()]
                if len(cs) == 2:
                    rs = [mpmath.mpf(-cs[1]) / cs[0]]
                else:
                    rs = mpmath.polyroots(cs, maxsteps=400, extraprec=4 * dps)
                roots.extend(rs * mult)
        return roots

    def weil_ok(self, tol: float = 1e-9) -> bool:
        target = mpmath.mpf(self.prime) ** (mpmath.mpf(self.weight) / 2)
        return all(abs(abs(r) / target - 1) <= tol for r in self.reciprocal_roots())

    def to_json(self) -> str:
        return json.dumps({"prime": self.prime, "weight": self.weight, "coefficients": list(self.coefficients)})

    @classmethod
    def from_json(cls, text: str) -> "EulerFactor":
        d = json.loads(text)
        return cls(d["prime"], tuple(d["coefficients"]), d["weight"])


def _expand(factors, m: int) -> list[int]:
    """Multiply out prod (1 - lam * t^k) over Z[zeta_m] and return integer coefficients."""
    poly = [CyclotomicInteger.integer(m, 1)]
    for lam, k in factors:
        new = poly + [CyclotomicInteger.integer(m, 0)] * k
        for i, c in enumerate(poly):
            new[i + k] = new[i + k] - lam * c
        poly = new
    return [c.to_int() for c in poly]


def motive_factor(F: WPolynomial, p: int, orbits) -> EulerFactor:
    """Frobenius factor of the given motive orbits; works over F_{p^f}, f = ord of p mod m."""
    exps, _ = _diagonal_data(F)
    m = _lcm(exps)
    f = multiplicative_order(p, m)
    vectors = [a for o in orbits for a in o.orbit]
    cosets = []
    seen = set()
    for a in vectors:
        if a not in seen:
            coset = {a.scaled(p**i) for i in range(f)}
            seen.update(coset)
            cosets.append(a)
    lam = _twisted_sums(F, p, f, cosets)
    coeffs = _expand([(lam[a], f) for a in cosets], m)
    return EulerFactor(p, tuple(coeffs), F.nvars - 2)


def transcendental_factor(F: WPolynomial, p: int) -> EulerFactor:
    exps, _ = _diagonal_data(F)
    m = _lcm(exps)
    orbits = [o for o in enumerate_motives(m, F.nvars - 2, [m // e for e in exps]) if not o.algebraic]
    return motive_factor(F, p, orbits)


def k3_euler_factor(record, p: int, check: bool = True) -> EulerFactor:
    from .singular import singular_loci

    F, w = record.equation, record.weight
    exps, _ = _diagonal_data(F)
    m = _lcm(exps)
    if (p - 1) % m:
        raise Unsupported(f"p = {p} is not 1 mod {m}")
    sings = singular_loci(w, F)
    r_exc = sum(s.point_count * len(s.chain) for s in sings)
    vectors = weighted_vectors(m, 2, [m // e for e in exps])
    if 1 + len(vectors) + r_exc != 22:
        raise ArithmeticError(f"Betti count 1 + {len(vectors)} + {r_exc} != 22")
    lam = _twisted_sums(F, p, 1, vectors)
    coeffs = _expand([(v, 1) for v in lam.values()], m)
    coeffs = _polymul(_polymul(coeffs, [1, -p]), _exceptional_polynomial(sings, p))
    ef = EulerFactor(p, tuple(coeffs), 2)
    if ef.degree != 22:
        raise ArithmeticError(f"Euler factor has degree {ef.degree}")
    if check:
        smooth = count_points_bruteforce(w, F, p) + resolution_correction(sings, p)
        trace = -ef.coefficients[1]
        if 1 + trace + p * p != smooth:
            raise TraceMismatch(f"1 + {trace} + {p}^2 != #S(F_{p}) = {smooth}")
    return ef


def rankin_selberg_convolve(f: EulerFactor, g: EulerFactor) -> EulerFactor:
    """Factor with reciprocal roots alpha_i * beta_j, via a resultant."""
    if f.prime != g.prime:
        raise ValueError(f"prime mismatch: {f.prime} vs {g.prime}")
    x, y = sympy.symbols("x y")
    A = sympy.Poly(list(f.coefficients), y)
    B = sum(c * x ** (g.degree - k) * y**k for k, c in enumerate(g.coefficients))
    R = sympy.Poly(sympy.resultant(A.as_expr(), B, y), x)
    coeffs = [int(c) for c in R.all_coeffs()]
    if coeffs[0] != 1:
        raise ArithmeticError("resultant is not monic")
    return EulerFactor(f.prime, tuple(coeffs), f.weight + g.weight)


# -- elliptic curves -----------------------------------------------------------

E2, E3 = "E2", "E3"


def elliptic_model(curve):
    from .wps import Weight

    if curve == E2:
        return Weight((2, 1, 1)), WPolynomial((2, 1, 1), (1, -1, -1), ((2, 0, 0), (0, 4, 0), (0, 0, 4)))
    if curve == E3:
        return Weight((3, 2, 1)), WPolynomial((3, 2, 1), (1, -1, -1), ((2, 0, 0), (0, 3, 0), (0, 0, 6)))
    a, b = curve
    terms = [(1, (2, 0, 0)), (-1, (0, 3, 0)), (-a, (0, 1, 4)), (-b, (0, 0, 6))]
    terms = [(c, e) for c, e in terms if c]
    return Weight((3, 2, 1)), WPolynomial((3, 2, 1), tuple(c for c, _ in terms), tuple(e for _, e in terms))


def _bad_primes(curve) -> set[int]:
    if curve == E2:
        return {2}
    if curve == E3:
        return {2, 3}
    a, b = curve
    disc = -16 * (4 * a**3 + 27 * b**2)
    if disc == 0:
        raise ValueError("singular Weierstrass curve")
    return {2, 3} | set(sympy.factorint(abs(disc)))


def ap_elliptic(curve, p: int) -> int:
    if p in _bad_primes(curve):
        raise ValueError(f"{curve} has bad reduction at {p}")
    w, F = elliptic_model(curve)
    if curve not in (E2, E3):
        kept = [(c, e) for c, e in F.terms() if c % p]
        F = WPolynomial(w, tuple(c for c, _ in kept), tuple(e for _, e in kept))
    ap = p + 1 - count_points_bruteforce(w, F, p)
    assert ap * ap <= 4 * p, "Hasse bound violated"
    return ap


def elliptic_factor(curve, p: int) -> EulerFactor:
    return EulerFactor(p, (1, -ap_elliptic(curve, p), p), 1)
