import pytest

from hopfdouble.lib import ydcat
from hopfdouble.lib.errors import CompatibilityFailed, NotCertified
from hopfdouble.lib.scalars import ONE
from hopfdouble.lib.util import linalg


def flip(d):
    m = linalg.zeros(d * d, d * d)
    for a in range(d):
        for b in range(d):
            m[b * d + a, a * d + b] = ONE
    return m


def test_catalog_holds_simples_and_projectives(yds):
    assert len(yds) == 42
    assert all(V.certified for V in yds.values())
    assert [yds['P_%d' % j].dim for j in range(6)] == [4] * 6


def test_yd_report_of_a_two_dim_simple(yds):
    report = ydcat.yd_report(yds['V_{3,1}'])
    assert report.passed
    assert {e.axiom for e in report.entries} >= {'comodule_counit', 'yd_compatibility'}


@pytest.mark.parametrize('name', ['K_chi^1', 'V_{3,1}', 'V_{2,2}', 'P_0'])
def test_braidings_satisfy_the_braid_relation(yds, name):
    c = ydcat.braiding_of(yds[name])
    assert c.certified
    assert c.is_invertible()
    assert c.braid_relation_holds()


def test_braiding_needs_a_certified_module(yds):
    V = yds['K_chi^0']
    raw = ydcat.YDModule(V.C, V.action, V.coaction, 'raw')
    with pytest.raises(NotCertified):
        ydcat.braiding_of(raw)


def test_broken_action_is_rejected(yds):
    V = yds['V_{3,1}']
    action = list(V.action)
    action[1] = linalg.zeros(2, 2)
    with pytest.raises(CompatibilityFailed) as e:
        ydcat.certify_yd(ydcat.YDModule(V.C, action, V.coaction, 'broken'))
    assert e.value.law == 'module_action'


def test_tensor_of_yd_modules(yds):
    W = ydcat.yd_tensor(yds['K_chi^1'], yds['V_{3,1}'])
    assert W.dim == 2
    assert ydcat.certify_yd(W).passed


def test_flip_is_a_braiding():
    c = ydcat.BraidedSpace(flip(2), 2, 'flip')
    assert c.certify().certified
    assert c.image(0, 1) == {(1, 0): ONE}
    assert c.format_image(0, 1) == 'v2⊗v1'
    assert c.to_json()['images']['v1⊗v2'] == 'v2⊗v1'


def test_braided_space_shape():
    with pytest.raises(ValueError):
        ydcat.BraidedSpace(linalg.zeros(3, 3), 2)


def test_printed_braiding_index_set(algebra, tables):
    with pytest.raises(ValueError):
        ydcat.printed_braiding(1, 3, tables, algebra.constants)
