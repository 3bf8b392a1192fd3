import itertools
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bvatlas.wps import (
    NotReducible, Weight, WPolynomial, diagonal_exponents, fermat_cover_degree,
    monomials_of_degree, normalize_weight, parse_polynomial, reduce_curve_model, transpose_exponents,
)


@pytest.mark.parametrize("w, expected", [
    ((2, 2, 1), (1, 1, 1)),
    ((15, 10, 2), (3, 1, 1)),
    ((1, 1, 1, 1), (1, 1, 1, 1)),
    ((6, 4, 2), (3, 2, 1)),
])
def test_normalize_weight(w, expected):
    assert normalize_weight(w).entries == expected


@given(st.lists(st.integers(1, 30), min_size=3, max_size=5))
def test_normalize_is_idempotent(w):
    once = normalize_weight(w)
    assert once.is_normalized
    assert normalize_weight(once) == once


def test_monomials_of_degree_14():
    mons = monomials_of_degree((5, 4, 3, 2), 14)
    assert len(mons) == 13
    assert (2, 1, 0, 0) in mons and (2, 0, 0, 2) in mons and (0, 0, 0, 7) in mons
    assert mons == sorted(mons, reverse=True) or mons == sorted(mons)


def test_monomials_quartic_count():
    assert len(monomials_of_degree((1, 1, 1, 1), 4)) == 35
    assert (2, 0, 0, 0) in monomials_of_degree((3, 1, 1, 1), 6)


def _oracle(w, d):
    if not w:
        return 1 if d == 0 else 0
    return sum(_oracle(w[1:], d - k * w[0]) for k in range(d // w[0] + 1))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=4), st.integers(1, 60))
def test_monomial_count_matches_recursion(w, d):
    mons = monomials_of_degree(w, d)
    assert all(sum(e * x for e, x in zip(m, w)) == d for m in mons)
    assert len(mons) == _oracle(w, d)


def test_parse_and_degree():
    F = parse_polynomial("x^2-y^5-z^5-w^10", (5, 2, 2, 1))
    assert F.degree == 10 and F.coefficients == (1, -1, -1, -1)
    with pytest.raises(ValueError):
        parse_polynomial("x^2+y^3", (5, 2, 2, 1))


def test_reduce_curve_model_examples():
    f = WPolynomial((2, 2, 1), (1, 1, 1), ((5, 0, 0), (0, 5, 0), (0, 0, 10)))
    w, g, d = reduce_curve_model((2, 2, 1), f)
    assert w.entries == (1, 1, 1) and d == 5
    assert set(g.exponents) == {(5, 0, 0), (0, 5, 0), (0, 0, 5)}
    f = WPolynomial((10, 3, 2), (1, 1, 1), ((3, 0, 0), (0, 10, 0), (0, 0, 15)))
    w, g, d = reduce_curve_model((10, 3, 2), f)
    assert w.entries == (5, 3, 1) and d == 15
    assert set(g.exponents) == {(3, 0, 0), (0, 5, 0), (0, 0, 15)}


def test_reduce_curve_model_refuses_fractional():
    f = WPolynomial((2, 2, 1), (1, 1), ((4, 0, 1), (0, 0, 9)))
    with pytest.raises(NotReducible):
        reduce_curve_model((2, 2, 1), f)


def test_transpose_example():
    w = (3, 3, 6, 8, 4)
    F = WPolynomial(w, (1,) * 5, ((8, 0, 0, 0, 0), (0, 8, 0, 0, 0), (0, 0, 4, 0, 0), (0, 0, 0, 3, 0), (0, 0, 0, 1, 4)))
    T, wt = transpose_exponents(F)
    assert wt.entries == (1, 1, 2, 2, 2)
    assert T.degree == 8
    assert set(T.exponents) == {(8, 0, 0, 0, 0), (0, 8, 0, 0, 0), (0, 0, 4, 0, 0), (0, 0, 0, 3, 1), (0, 0, 0, 0, 4)}
    back, w2 = transpose_exponents(T)
    assert set(back.exponents) == set(F.exponents) and w2 == normalize_weight(w)


def test_transpose_of_diagonal_is_itself():
    F = parse_polynomial("x^2-y^3-z^7-w^42", (21, 14, 6, 1))
    T, w = transpose_exponents(F)
    assert set(T.exponents) == set(F.exponents) and w.entries == (21, 14, 6, 1)


def test_fermat_cover_degrees():
    assert fermat_cover_degree(parse_polynomial("x^4+y^4+z^4+w^4", (1, 1, 1, 1))) == 4
    assert fermat_cover_degree(parse_polynomial("x^2-y^3-z^7-w^42", (21, 14, 6, 1))) == 42
    assert fermat_cover_degree(parse_polynomial("x^2-y^3z-z^7-w^14", (7, 4, 2, 1))) == 42


@given(st.lists(st.integers(2, 12), min_size=4, max_size=4))
def test_cover_degree_of_diagonal_is_lcm(ms):
    d = lcm(*ms)
    w = [d // m for m in ms]
    F = WPolynomial(w, (1,) * 4, tuple(tuple(m if i == j else 0 for j in range(4)) for i, m in enumerate(ms)))
    assert diagonal_exponents(F) == ms
    assert fermat_cover_degree(F) == d


def test_weight_validation():
    with pytest.raises(ValueError):
        Weight((0, 1, 1))
    with pytest.raises(ValueError):
        WPolynomial((1, 1), (1, 0), ((1, 0), (0, 1)))
