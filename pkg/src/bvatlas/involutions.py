"""Coordinate involutions x_i -> -x_i and the Delsarte search.

Flipping one coordinate negates the ambient form dx_0^...^dx_3, so on the
residue 2-form Res(Omega_0 / F) the involution acts by -eps, where eps is the
sign F picks up. eps = +1 therefore means non-symplectic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .quasismooth import quasismooth_exact
from .wps import WPolynomial, as_weight, monomials_of_degree

NON_SYMPLECTIC = "non_symplectic"
SYMPLECTIC = "symplectic"


class NotAnAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class InvolutionCandidate:
    equation: WPolynomial
    variable_index: int
    semi_invariance_sign: int
    classification: str


def semi_invariant_sign(F: WPolynomial, i: int) -> int | None:
    parities = {e[i] % 2 for e in F.exponents}
    if parities == {0}:
        return 1
    if parities == {1}:
        return -1
    return None


def classify_involution(F: WPolynomial, i: int) -> str:
    sign = semi_invariant_sign(F, i)
    if sign is None:
        raise NotAnAutomorphism(f"x{i} -> -x{i} does not preserve {F}")
    return NON_SYMPLECTIC if sign == 1 else SYMPLECTIC


def involution_variables(F: WPolynomial) -> list[int]:
    return [i for i in range(F.nvars) if semi_invariant_sign(F, i) == 1]


def pointing_monomials(w, d: int, i: int) -> list[tuple[int, ...]]:
    """Monomials x_i^a or x_i^a x_j of degree d."""
    out = []
    for e in monomials_of_degree(w, d):
        if e[i] < 1:
            continue
        rest = [k for j, k in enumerate(e) if j != i]
        if sum(rest) <= 1:
            out.append(e)
    return out


def delsarte_search(w) -> list[InvolutionCandidate]:
    """All quasi-smooth 4-monomial equations with a non-symplectic x_i -> -x_i.

    A quasi-smooth equation needs, for every variable, a monomial x_i^a or
    x_i^a x_j. On a K3 weight no monomial serves two variables, so a
    Delsarte equation is exactly one such monomial per variable.
    """
    w = as_weight(w)
    d = w.total
    choices = [pointing_monomials(w, d, i) for i in range(len(w))]
    found = []
    seen = set()
    for pick in product(*choices):
        key = frozenset(pick)
        if len(key) != len(pick) or key in seen:
            continue
        seen.add(key)
        F = WPolynomial(w, (1,) * len(pick), tuple(sorted(pick, reverse=True)))
        vars_ = involution_variables(F)
        if not vars_ or not quasismooth_exact(F):
            continue
        for i in vars_:
            found.append(InvolutionCandidate(F, i, 1, NON_SYMPLECTIC))
    found.sort(key=lambda c: (c.equation.exponents, c.variable_index))
    return found


def search_contains(candidates, F: WPolynomial, i: int) -> bool:
    target = F.exponent_set()
    return any(c.equation.exponent_set() == target and c.variable_index == i for c in candidates)
