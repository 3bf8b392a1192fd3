from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bvatlas.singular import (
    NotQuasiSmooth, exceptional_rank, hj_expand, lattice_rays, singular_loci, singularity_multiset,
)
from bvatlas.wps import WPolynomial, parse_polynomial


def _by_weight(ds, w):
    return next(r for r in ds.records if r.weight.entries == w and r.equation is not None)


@pytest.mark.parametrize("n, q, digits", [
    (7, 6, (2, 2, 2, 2, 2, 2)),
    (5, 2, (3, 2)),
    (10, 7, (2, 2, 4)),
    (5, 1, (5,)),
])
def test_hj_examples(n, q, digits):
    h = hj_expand(n, q)
    assert h.digits == digits
    assert h.value() == Fraction(n, q)


def test_hj_rejects_noncoprime():
    with pytest.raises(ValueError):
        hj_expand(6, 4)


@given(st.integers(2, 200), st.integers(1, 199))
def test_hj_reevaluates(n, q):
    assume(q < n and gcd(n, q) == 1)
    h = hj_expand(n, q)
    assert h.value() == Fraction(n, q)
    assert all(b >= 2 for b in h.digits)


@given(st.integers(2, 60), st.integers(1, 59))
def test_lattice_rays_count_matches_hj(n, q):
    assume(q < n and gcd(n, q) == 1)
    # mu_n acting by (zeta^q, zeta): chain length equals the number of HJ digits
    assert len(lattice_rays(n, q, 1)) == len(hj_expand(n, q).digits)


def test_no8(ds):
    rec = ds.get(8)
    sings = singular_loci(rec.weight, rec.equation)
    assert singularity_multiset(sings) == {"A_2": 2, "A_1": 2}
    for s in sings:
        assert [-b for b in hj_expand(s.n, s.q).digits] == s.chain


def test_no60(ds):
    rec = ds.get(60)
    sings = singular_loci(rec.weight, rec.equation)
    assert singularity_multiset(sings) == {"A_6": 1, "A_3": 1, "A_1": 1}
    vertex = [s for s in sings if s.kind == "vertex"]
    assert sorted(s.n for s in vertex) == [4, 7]


def test_no6_five_a1(ds):
    rec = ds.get(6)
    sings = singular_loci(rec.weight, rec.equation)
    assert len(sings) == 1
    assert sings[0].point_count == 5 and sings[0].label == "A_1"
    assert sings[0].stratum == (0, 3)


def test_no78(ds):
    rec = ds.get(78)
    assert singularity_multiset(singular_loci(rec.weight, rec.equation)) == {"A_1": 1, "A_3": 1, "A_5": 1}


@pytest.mark.parametrize("w, r", [((7, 3, 2, 2), 9), ((8, 4, 3, 1), 8), ((24, 16, 5, 3), 15)])
def test_exceptional_rank(ds, w, r):
    rec = _by_weight(ds, w)
    assert exceptional_rank(rec.weight, rec.equation) == r


def test_chains_match_hj_everywhere(ds):
    for rec in ds.records:
        if rec.equation is None or not 1 <= rec.source_table <= 6:
            continue
        for s in singular_loci(rec.weight, rec.equation):
            assert 1 <= s.q < s.n and gcd(s.n, s.q) == 1
            assert [-b for b in hj_expand(s.n, s.q).digits] == s.chain, rec.yonemura_id


def test_non_quasismooth_edge_detected():
    # the edge {x2 = x3 = 0} lies in F
    F = WPolynomial((2, 2, 1, 1), (1,) * 4, ((2, 0, 2, 0), (0, 2, 0, 2), (0, 0, 6, 0), (0, 0, 0, 6)))
    with pytest.raises(NotQuasiSmooth):
        singular_loci(F.weight, F)
