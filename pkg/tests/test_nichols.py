import numpy as np
import pytest

from hopfdouble.lib import nichols, repmod, ydcat
from hopfdouble.lib.scalars import ONE
from hopfdouble.lib.util import linalg


@pytest.fixture(scope='module')
def braidings(yds):
    names = ('K_chi^0', 'K_chi^1', 'K_chi^2', 'V_{3,1}', 'V_{3,5}', 'V_{2,2}', 'V_{2,4}')
    return {name: ydcat.braiding_of(yds[name]) for name in names}


def test_odd_character_gives_exterior_algebra(braidings):
    report = nichols.nichols_ranks(braidings['K_chi^1'], maxdeg=4)
    assert report.ranks == [1, 1, 0, 0, 0]
    assert report.verdict == 'finite'
    assert report.total == 2
    assert report.zero_check == [[2, 0], [3, 0]]


@pytest.mark.parametrize('name', ['K_chi^0', 'K_chi^2'])
def test_even_character_is_infinite(braidings, name):
    report = nichols.nichols_ranks(braidings[name], maxdeg=4)
    assert report.ranks == [1] * 5
    assert report.verdict == 'infinite'
    assert report.witness is not None
    assert report.total is None


@pytest.mark.parametrize('name', ['V_{3,1}', 'V_{3,5}', 'V_{2,2}', 'V_{2,4}'])
def test_finite_two_dim_has_dimension_six(braidings, name):
    report = nichols.nichols_ranks(braidings[name], maxdeg=6)
    assert report.ranks == [1, 2, 2, 1, 0, 0, 0]
    assert report.verdict == 'finite'
    assert report.total == 6
    assert report.top_degree == 3
    assert report.palindromic
    assert report.to_json()['ranks'] == report.ranks


def test_zero_budget_truncates(braidings):
    report = nichols.nichols_ranks(braidings['V_{3,1}'], maxdeg=4, memory_budget_mb=0)
    assert report.truncated_at == 1
    assert report.ranks == [1, 2]
    assert report.verdict == 'undecided'


def test_maxdeg_below_two(braidings):
    with pytest.raises(ValueError):
        nichols.nichols_ranks(braidings['K_chi^1'], maxdeg=1)


@pytest.mark.parametrize('n', [2, 3])
def test_symmetrizer_matches_sum_over_permutations(braidings, n):
    c = braidings['V_{3,1}']
    assert linalg.is_zero(nichols.quantum_symmetrizer(c, n) - nichols.symmetrizer_by_permutations(c, n))


def test_braid_lift_is_independent_of_reduced_word(braidings):
    assert nichols.lift_independent(braidings['V_{3,1}'], 3)
    with pytest.raises(ValueError):
        nichols.braid_lift(braidings['V_{3,1}'], 3, (0, 0, 1))


def test_reduced_word():
    assert nichols.reduced_word((1, 0, 2)) == [1]
    assert nichols.reduced_word((2, 1, 0)) == [1, 2, 1]
    assert nichols.reduced_word((2, 1, 0), last=True) == [2, 1, 2]
    assert nichols.reduced_word((0, 1, 2)) == []


def test_degree_one_one_coproduct(braidings):
    c = braidings['V_{3,1}']
    x = linalg.zeros(1, 4)[0]
    x[1] = ONE
    x[2] = ONE + ONE
    comp = nichols.braided_coproduct_component(c, x, 1, 1)
    assert linalg.is_zero(comp - (x + c.apply(x)).reshape(2, 2))


def test_relation_membership(braidings):
    v2 = np.array([ONE], dtype=object)
    assert nichols.relation_membership(v2, braidings['K_chi^1'], 2)
    assert not nichols.relation_membership(v2, braidings['K_chi^0'], 2)
    with pytest.raises(ValueError):
        nichols.relation_membership(v2, braidings['K_chi^1'])


def test_presentation_of_exterior_algebra(algebra, tables, braidings):
    entry = tables['nichols_presentations']['K1']
    p = nichols.PresentedBraidedAlgebra.from_table('K1', entry, algebra.constants)
    basis = nichols.presented_basis(p, 2)
    assert basis.dim == 2
    assert basis.hilbert == [1, 1]
    assert nichols.check_presentation(p, braidings['K_chi^1']).passed


def test_presentation_of_V31(algebra, tables, braidings):
    entry = tables['nichols_presentations']['V31']
    p = nichols.PresentedBraidedAlgebra.from_table('V31', entry, algebra.constants)
    basis = nichols.presented_basis(p, 6)
    assert basis.hilbert == [1, 2, 2, 1]
    assert nichols.check_presentation(p, braidings['V_{3,1}']).passed


def test_non_simple_indecomposables_are_infinite(algebra):
    rows, report = nichols.indecomposable_infinite_scan(algebra)
    assert report.passed
    assert rows['M_0^+']['verdict'] == 'infinite'
    assert rows['M_0^(+-)']['verdict'] == 'not a module'


def test_degree_kernel(braidings):
    assert len(nichols.degree_kernel(braidings['K_chi^1'], 2)) == 1
    assert nichols.degree_kernel(braidings['K_chi^0'], 2) == []


def test_primitive_modulo_no_relations(braidings):
    v2 = np.array([ONE], dtype=object)
    assert nichols.is_primitive_modulo(braidings['K_chi^1'], v2, {}, 2)
    assert not nichols.is_primitive_modulo(braidings['K_chi^0'], v2, {}, 2)


def test_V31_dimension_for_both_theta(signed_algebra):
    V = ydcat.to_yd(repmod.two_dim_simple(3, 1, signed_algebra))
    report = nichols.nichols_ranks(ydcat.braiding_of(V), maxdeg=5)
    assert report.ranks == [1, 2, 2, 1, 0, 0]
    assert report.verdict == 'finite'


@pytest.mark.parametrize('j', range(6))
def test_projective_modules_have_witnesses(yds, j):
    c = ydcat.braiding_of(yds['P_%d' % j])
    assert nichols.eigenone_witness(c, nichols.basis_candidates(4)) is not None


@pytest.mark.parametrize('kl', [(1, 0), (4, 3), (3, 0), (2, 3), (5, 0), (0, 3),
                                (0, 1), (0, 2), (3, 2), (0, 4), (3, 4), (0, 5)])
def test_first_basis_vector_is_a_witness(yds, kl):
    c = ydcat.braiding_of(yds['V_{%d,%d}' % kl])
    v1 = nichols.basis_candidates(2)[0]
    assert nichols.eigenone_witness(c, [v1]) is not None


def test_V31_has_no_basis_witness(braidings):
    assert nichols.eigenone_witness(braidings['V_{3,1}'], nichols.basis_candidates(2)) is None


def test_simple_verdicts(yds, algebra):
    verdicts = nichols.simple_verdicts(yds, algebra, maxdeg=6)
    assert len(verdicts) == 36
    finite = sorted(n for n, v in verdicts.items() if v['verdict'] == 'finite')
    assert finite == sorted(['K_chi^1', 'K_chi^3', 'K_chi^5', 'V_{3,1}', 'V_{3,5}', 'V_{2,2}', 'V_{2,4}'])
    assert verdicts['K_chi^0']['verdict'] == 'infinite'
    assert verdicts['V_{1,0}']['verdict'] == 'infinite'


def test_dual_partner_ranks_agree(yds, algebra):
    rows = nichols.dual_partners(yds, algebra, ['V_{0,1}', 'V_{3,1}'], maxdeg=4)
    assert rows['V_{0,1}']['partner'] == 'V_{5,2}'
    assert rows['V_{3,1}']['partner'] == 'V_{2,2}'
    assert all(row['agree'] for row in rows.values())
    assert rows['V_{3,1}']['ranks'] == [1, 2, 2, 1, 0]
