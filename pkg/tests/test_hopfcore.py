import pytest

from hopfdouble.lib import catalog, hopfcore
from hopfdouble.lib.errors import MalformedTensor, NotCertified, NotClosed, NotGrouplike
from hopfdouble.lib.scalars import ONE, ZERO, as_scalar


def test_group_algebra_and_its_dual():
    H = catalog.group_algebra(3)
    assert 'hopf' in H.certified
    assert len(hopfcore.grouplikes(H)) == 3
    # characters of Z3 take values in the cube roots of unity, all in Q(xi)
    assert len(hopfcore.grouplikes(hopfcore.dual_hopf(H))) == 3


def test_C_invariants(C):
    assert len(hopfcore.grouplikes(C)) == 2
    assert len(hopfcore.grouplikes(hopfcore.dual_hopf(C))) == 6
    assert hopfcore.antipode_order(C) == 4
    assert hopfcore.trace_of_square(C) == 0


def test_grouplikes_of_C_are_powers_of_a3(C):
    found = {tuple(x for x in g) for g in hopfcore.grouplikes(C)}
    one = tuple(ONE if i == 0 else ZERO for i in range(12))
    a3 = tuple(ONE if i == 3 else ZERO for i in range(12))
    assert found == {one, a3}


def test_skew_primitives_of_A0():
    A0 = catalog.build_pointed('A0')
    one, g = A0.e('1'), A0.e('g')
    # x and 1 - g
    assert len(hopfcore.skew_primitives(A0, one, g)) == 2


def test_skew_primitives_need_grouplikes(C):
    with pytest.raises(NotGrouplike):
        hopfcore.skew_primitives(C, C.e('1'), C.e('a'))


def test_perturbed_structure_fails_verification(C):
    H = hopfcore.perturbed(C, 'comult', [0, 0, 0], '+1')
    report = hopfcore.verify_hopf(H)
    assert not report.passed
    assert 'hopf' not in H.certified
    assert any(e.axiom for e in report.failed())


def test_uncertified_algebras_are_refused(C):
    H = hopfcore.perturbed(C, 'mult', [1, 1, 2], '1')
    with pytest.raises(NotCertified):
        hopfcore.dual_hopf(H)
    with pytest.raises(NotCertified):
        hopfcore.variant(H, 'cop')


def test_malformed_tensor():
    with pytest.raises(MalformedTensor):
        hopfcore.FinDimHopf('bad', ['1'], {(0, 0): {1: ONE}}, {0: ONE}, {0: {(0, 0): ONE}}, [ONE])


def test_json_restores_structure_but_not_certificates(C):
    H = hopfcore.from_json(hopfcore.to_json(C))
    assert H.mult == C.mult
    assert H.comult == C.comult
    assert H.antipode == C.antipode
    assert H.generators == C.generators
    assert H.certified == set()
    assert hopfcore.verify_hopf(H).passed
    assert H.certified == C.certified


def test_corrupted_json_is_not_certified(C):
    data = hopfcore.to_json(C)
    assert data['certified']
    i, j, k, s = data['mult'][5]
    data['mult'][5] = [i, j, k, (as_scalar(s) + ONE).to_literal()]
    H = hopfcore.from_json(data)
    assert H.certified == set()
    with pytest.raises(NotCertified):
        hopfcore.dual_hopf(H)
    assert not hopfcore.verify_hopf(H).passed
    assert 'hopf' not in H.certified


def test_variants_are_hopf(C):
    for which in ('op', 'cop', 'bop'):
        report = hopfcore.verify_hopf(hopfcore.variant(C, which))
        assert report.passed, which


def test_generator_strategy_matches_full_check(C):
    report = hopfcore.verify_hopf(hopfcore.from_json(hopfcore.to_json(C)), full_check_max_dim=4)
    assert report.strategy == 'generators'
    assert report.passed


def test_sweedler_part_of_C_is_a_subalgebra(C):
    closed, _ = hopfcore.is_subalgebra(C, [C.e('1'), C.e('a3'), C.e('ba2'), C.e('ba5')])
    assert closed
    closed, witness = hopfcore.is_subalgebra(C, [C.e('1'), C.e('a')])
    assert not closed
    assert witness is not None


def test_phi_is_a_hopf_isomorphism():
    phi = catalog.phi_iso('plus')
    assert phi.report.passed


def test_dense_element_operations(C):
    a = [1 if i == 1 else 0 for i in range(12)]
    a2 = C.product(a, a)
    assert a2[2] == 1 and sum(1 for s in a2 if s) == 1
    one = [1] + [0] * 11
    delta = C.coproduct(one)
    assert delta[0, 0] == 1
    assert C.apply_antipode(one)[0] == 1
    assert C.counit_of(C.e('a3')) == 1


def test_grouplike_sub_hopf_algebra(C):
    Z2 = hopfcore.subhopf(C, [C.index('1'), C.index('a3')])
    assert hopfcore.verify_hopf(Z2).passed
    assert len(hopfcore.grouplikes(Z2)) == 2
    with pytest.raises(NotClosed):
        hopfcore.subhopf(C, [C.index('1'), C.index('a')])


@pytest.mark.parametrize('name', ['K', 'Z2', 'A1'])
def test_drinfeld_double_is_hopf(name):
    H = catalog.build(name)
    D = hopfcore.drinfeld_double(H)
    assert D.dim == H.dim ** 2
    assert hopfcore.verify_hopf(D).passed
    assert 'hopf' in D.certified


def test_double_of_Z2_is_a_group_algebra():
    D = hopfcore.drinfeld_double(catalog.build('Z2'))
    hopfcore.verify_hopf(D)
    assert len(hopfcore.grouplikes(D)) == 4


def test_drinfeld_double_needs_certificate(C):
    with pytest.raises(NotCertified):
        hopfcore.drinfeld_double(hopfcore.perturbed(C, 'mult', [1, 1, 2], '1'))


@pytest.mark.parametrize('theta_sign', ['plus', 'minus'])
def test_C_invariants_for_both_theta(theta_sign):
    H = catalog.build_C(theta_sign)
    assert hopfcore.verify_hopf(H).passed
    assert len(hopfcore.grouplikes(H)) == 2
    assert len(hopfcore.grouplikes(hopfcore.dual_hopf(H))) == 6
    assert hopfcore.antipode_order(H) == 4
