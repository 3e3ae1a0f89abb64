import pytest

from hopfdouble.lib import catalog, hopfcore
from hopfdouble.lib.errors import UnknownName


@pytest.mark.parametrize('name', ['A0', 'A1', 'B0', 'B1'])
def test_pointed_algebras(name):
    H = catalog.build(name)
    assert H.dim == 12
    assert 'hopf' in H.certified
    assert len(hopfcore.grouplikes(H)) == 6


@pytest.mark.parametrize('sign', ['plus', 'minus'])
def test_C_is_certified_for_both_signs(sign):
    C = catalog.build('C', sign)
    assert C.basis == catalog.C_BASIS
    assert 'hopf' in C.certified


def test_small_catalog_entries():
    assert catalog.build('Z2').dim == 2
    K = catalog.build('K')
    assert K.dim == 1
    assert 'hopf' in K.certified


def test_unknown_name():
    with pytest.raises(UnknownName):
        catalog.build('E8')
    with pytest.raises(UnknownName):
        catalog.build_pointed('C')


def test_double(algebra):
    D = algebra.D
    assert D.dim == 144
    assert 'hopf' in D.certified
    assert algebra.embedding.verify().passed
    assert algebra.embedding.pbw_rank() == 144
    assert algebra.generators == ['a', 'b', 'g', 'x']


def test_double_restored_from_json(algebra):
    D = hopfcore.from_json(hopfcore.to_json(algebra.D))
    embedding = catalog.GeneratorEmbedding(D, catalog.d_presentation('plus'), D.generators)
    assert embedding.require()


def test_printed_dual_coproducts_differ_in_three_rows(C, tables):
    rows = catalog.dual_table_diff(tables, 'plus', C)
    assert sorted(r['row'] for r in rows) == ['1*', 'a5*', 'ba3*']
