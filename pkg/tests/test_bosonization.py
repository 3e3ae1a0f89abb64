from collections import OrderedDict

import pytest

from hopfdouble.lib import bosonization
from hopfdouble.lib.errors import UnknownName
from hopfdouble.lib.scalars import ONE


def test_trivial_biproduct_is_C(C):
    H = bosonization.radford_biproduct(bosonization.trivial_data(C))
    assert H.dim == C.dim
    assert 'hopf' in H.certified
    for i in range(C.dim):
        x = {i: ONE}
        assert H.comul(x) == C.comul(x)
        assert H.S(x) == C.S(x)
        for j in range(C.dim):
            assert H.mul(x, {j: ONE}) == C.mul(x, {j: ONE})


def test_exterior_biproduct(suite):
    H = suite.biproduct('K1')
    assert H.dim == 24
    assert 'hopf' in H.certified
    assert len(bosonization.coinvariants(H)) == suite.data('K1').dim == 2
    assert not bosonization.coradical_report(H)['subalgebra']


def test_exterior_biproduct_presentation(suite):
    assert suite.verify_presentation('K1').passed


def test_projection_splits_inclusion(suite, C):
    H = suite.biproduct('K1')
    for name in ('a', 'b', 'ba3'):
        x = C.e(name)
        assert H.pi(H.iota_C(x)) == x


def test_unknown_biproduct(suite):
    with pytest.raises(UnknownName):
        suite.entry('X')


def test_compare_fingerprints():
    prints = OrderedDict([('A', {'grouplikes': 6}), ('B', {'grouplikes': 6}), ('C', {'grouplikes': 2})])
    out = bosonization.compare_fingerprints(prints)
    assert out == {'A/B': 'not separated', 'A/C': 'separated', 'B/C': 'separated'}


def test_extend_yd(suite, C):
    data = bosonization.extend_yd(suite.presented('K1'), suite.yd_module('K1'), C)
    assert data.dim == 2
    assert data.max_degree is None


@pytest.mark.parametrize('name', ['K3', 'K5'])
def test_other_exterior_presentations(suite, name):
    H = suite.biproduct(name)
    assert H.dim == 24
    assert suite.verify_presentation(name).passed


def test_coalgebra_defects(C):
    x = C.e('a')
    X = C.comul(x)
    assert bosonization.coalgebra_defects(C, x, X) == []
    doubled = {k: s + s for k, s in X.items()}
    assert bosonization.coalgebra_defects(C, x, doubled) == ['left counit', 'right counit']


def test_misprinted_coproduct_row_is_noted(suite, monkeypatch):
    rows = [{'label': 'Delta(v)', 'element': 'v', 'terms': [[2, 'v', ''], [2, 'a^3', 'v']]}]
    monkeypatch.setitem(suite.entry('K1'), 'coproducts', rows)
    report = suite.verify_presentation('K1')
    assert report.passed
    assert report.notes == ['coproduct Delta(v): printed side breaks left counit, right counit']


def test_unexplained_coproduct_mismatch_fails(suite, monkeypatch):
    rows = [{'label': 'Delta(v)', 'element': 'v', 'terms': [[2, 'v', ''], [2, 'a^3', 'v']]}]
    monkeypatch.setitem(suite.entry('K1'), 'coproducts', rows)
    monkeypatch.setattr(bosonization, 'coalgebra_defects', lambda H, x, X: [])
    report = suite.verify_presentation('K1')
    assert not report.passed
    assert not report.entry('coproduct Delta(v)').passed
    assert report.notes == []


def test_biproduct_of_V31(suite):
    H = suite.biproduct('V31')
    assert H.dim == 72
    assert 'hopf' in H.certified
    assert len(bosonization.coinvariants(H)) == suite.data('V31').dim == 6
    assert not bosonization.coradical_report(H)['subalgebra']
    report = suite.verify_presentation('V31')
    assert len(report.entries) == 7 + 8
    assert report.entry('coproduct Delta(a)').passed


def test_fingerprint_of_V31_biproduct(suite):
    prints = bosonization.fingerprint(suite.biproduct('V31'))
    assert prints['grouplikes'] == 2
    assert list(prints) == ['grouplikes', 'skew_primitives', 'characters', 'trace_S2', 'antipode_order']
    assert len(prints['skew_primitives']) == 4


def test_build_all(suite):
    built = suite.build_all()
    assert list(built) == list(bosonization.BOSONIZATION_NAMES)
    assert sorted(H.dim for H in built.values()) == [24, 24, 24, 72, 72, 72, 72]
    assert all('hopf' in H.certified for H in built.values())


def test_exterior_biproduct_for_both_theta(signed_algebra, tables):
    suite = bosonization.BosonizationSuite(signed_algebra, tables)
    H = suite.biproduct('K1')
    assert H.dim == 24
    assert 'hopf' in H.certified
    assert suite.verify_presentation('K1').passed
