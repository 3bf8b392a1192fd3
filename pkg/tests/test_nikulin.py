import pytest

from bvatlas.nikulin import (
    NO_MIRROR, PALE_REGION, TYPE_III, NikulinInvariants, fixed_curve_genus, fixed_locus,
    invariants_of, is_borcea_type, lattice_a_check, lefschetz_r, mirror_triplet, nikulin_invariants,
    r_closed_formula, triplet_atlas,
)
from bvatlas.wps import WPolynomial

# weights of the five closed-formula examples and the values of r they give
CLOSED = {(7, 3, 2, 2): 10, (15, 10, 3, 2): 10, (8, 4, 3, 1): 6, (10, 5, 3, 2): 8, (24, 16, 5, 3): 14}


@pytest.mark.parametrize("w, exps, g", [
    ((2, 2, 1), ((5, 0, 0), (0, 5, 0), (0, 0, 10)), 6),
    ((3, 2, 1), ((4, 0, 0), (0, 6, 0), (0, 0, 12)), 7),
    ((6, 4, 1), ((3, 0, 0), (1, 3, 0), (0, 0, 18)), 3),
])
def test_fixed_curve_genus(w, exps, g):
    assert fixed_curve_genus(w, WPolynomial(w, (1,) * len(exps), exps)) == g


@pytest.mark.parametrize("yid, gk, ra", [
    (8, (7, 0), (4, 4)),
    (60, (3, 5), (13, 3)),
    (89, (5, 4), (10, 2)),
    (6, (6, 1), (6, 4)),
    (45, (6, 5), (10, 0)),
])
def test_worked_examples(ds, yid, gk, ra):
    rec = ds.get(yid)
    rep = fixed_locus(rec.weight, rec.equation, rec.involution_variable)
    assert (rep.g, rep.k) == gk
    assert nikulin_invariants(rep).pair() == ra


def test_no60_components(ds):
    rec = ds.get(60)
    rep = fixed_locus(rec.weight, rec.equation, 0)
    genera = sorted(c.genus for c in rep.components)
    assert genera == [0, 0, 0, 0, 0, 3]
    assert sum(c.source == "exceptional" for c in rep.components) == 4


def test_invariant_conversions():
    assert NikulinInvariants(13, 3).g == 3 and NikulinInvariants(13, 3).k == 5
    assert NikulinInvariants(4, 4).g == 7 and NikulinInvariants(4, 4).k == 0
    assert NikulinInvariants(6, 4).pair() == (6, 4)
    with pytest.raises(ValueError):
        NikulinInvariants(5, 4)
    with pytest.raises(ValueError):
        NikulinInvariants(2, -2)


def test_type_ii_and_iii(ds):
    rec = ds.get(2)
    rep = fixed_locus(rec.weight, rec.equation, 1)
    assert rep.kind == TYPE_III
    assert nikulin_invariants(rep).pair() == (10, 8)


@pytest.mark.parametrize("w, r", sorted(CLOSED.items()))
def test_closed_formula_examples(ds, w, r):
    rec = next(x for x in ds.records if x.weight.entries == w and x.equation is not None)
    assert r_closed_formula(rec.weight, rec.equation) == r
    assert invariants_of(rec.weight, rec.equation, 0).r == r


def test_closed_formula_on_all_borcea_rows(ds):
    for rec in ds.records:
        if rec.equation is None or rec.involution_variable != 0 or not is_borcea_type(rec.equation):
            continue
        assert r_closed_formula(rec.weight, rec.equation) == invariants_of(rec.weight, rec.equation, 0).r, \
            rec.yonemura_id


def test_lefschetz_oracle_agrees(ds):
    for rec in ds.records:
        if rec.equation is None or rec.involution_variable is None or not 1 <= rec.source_table <= 6:
            continue
        got = invariants_of(rec.weight, rec.equation, rec.involution_variable).r
        assert lefschetz_r(rec.weight, rec.equation, rec.involution_variable) == got, rec.yonemura_id


def test_mirror_triplets():
    assert mirror_triplet(NikulinInvariants(10, 0, 0)).mirror == NikulinInvariants(10, 0, 0)
    assert mirror_triplet(NikulinInvariants(7, 3, 0)).mirror == NikulinInvariants(13, 3, 0)
    assert mirror_triplet(NikulinInvariants(14, 6, 0)).mirror is None
    for t in PALE_REGION:
        assert mirror_triplet(NikulinInvariants(*t)).mirror is None


def test_mirror_unknown_delta_is_conditional():
    res = mirror_triplet(NikulinInvariants(14, 6))
    assert res.conditional and res.mirror == NikulinInvariants(6, 6)
    assert mirror_triplet(NikulinInvariants(18, 4)).mirror is None


def test_mirror_is_involutive():
    for r in range(1, 20):
        for a in range(0, 12):
            if (r - a) % 2 or r + a > 22 or 20 - r + a > 22 or (r, a, 0) in NO_MIRROR:
                continue
            t = NikulinInvariants(r, a, 0)
            m = mirror_triplet(t).mirror
            if m is not None and (m.r, m.a, 0) not in NO_MIRROR:
                assert mirror_triplet(m).mirror == t


def test_lattice_check():
    assert lattice_a_check([[-4, 2, 0, 2], [2, -4, 0, 0], [0, 0, -4, 2], [2, 0, 2, -2]], 4)
    assert not lattice_a_check([[-4, 2, 0, 0], [2, -4, 0, 0], [0, 0, -4, 0], [0, 0, 0, 12]], 4)
    assert lattice_a_check([[-2]], 1)
    with pytest.raises(ValueError):
        lattice_a_check([[1, 2], [0, 1]], 0)


def test_atlas_collects_discrepancies(ds):
    res = triplet_atlas(ds.records[:10])
    assert all(isinstance(k, tuple) for k in res.pairs)
    assert any("#3" in d for d in res.discrepancies)
