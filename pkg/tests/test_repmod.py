from collections import OrderedDict

import pytest

from hopfdouble.lib import repmod
from hopfdouble.lib.errors import NotIndecomposable, RelationViolated, UnknownName
from hopfdouble.lib.util import linalg


@pytest.fixture(scope='module')
def characters(algebra):
    return OrderedDict((M.name, M) for M in repmod.character_modules(algebra))


def test_simple_census(algebra):
    simples = repmod.simple_catalog(algebra)
    assert len(simples) == 36
    assert sum(M.dim ** 2 for M in simples.values()) == 126
    assert all(repmod.is_simple(M) for M in simples.values())


def test_characters_are_exhaustive(algebra):
    solutions = repmod.one_dim_solutions(algebra)
    assert len(solutions) == 6
    assert all(not s['b'] and not s['x'] for s in solutions)


def test_simples_are_pairwise_non_isomorphic(algebra):
    simples = list(repmod.two_dim_simples(algebra).values())
    for k, M in enumerate(simples):
        for N in simples[k + 1:]:
            assert not repmod.hom_space(M, N)


def test_two_dim_index_set(algebra):
    assert repmod.in_simple_index_set(3, 1)
    assert not repmod.in_simple_index_set(1, 3)
    with pytest.raises(UnknownName):
        repmod.module_by_name('V13', algebra)


def test_tensor_with_character(algebra):
    V = repmod.two_dim_simple(3, 1, algebra)
    K1 = repmod.character(1, algebra)
    M = repmod.tensor_module(V, K1)
    assert repmod.is_isomorphic(M, repmod.two_dim_simple(4, 4, algebra)).verdict == 'yes'


@pytest.mark.parametrize('ij', [(3, 1), (0, 1), (2, 4)])
def test_dual_of_two_dim_simple(algebra, ij):
    V = repmod.two_dim_simple(*ij, algebra)
    partner = repmod.two_dim_simple(*repmod.dual_simple_index(*ij), algebra)
    result = repmod.is_isomorphic(repmod.dual_module(V), partner)
    assert result.verdict == 'yes'
    assert linalg.rank(result.witness) == 2


def test_dual_simple_index():
    assert repmod.dual_simple_index(3, 1) == (2, 2)
    assert repmod.dual_simple_index(0, 1) == (5, 2)


def test_module_by_name(algebra):
    assert repmod.module_by_name('V31', algebra).name == 'V_{3,1}'
    assert repmod.module_by_name('V_{3,1}', algebra).name == 'V_{3,1}'
    assert repmod.module_by_name('K1', algebra).name == 'K_chi^1'
    assert repmod.module_by_name('P2', algebra).name == 'P_2'
    assert repmod.module_by_name('M0+', algebra).name == 'M_0^+'
    with pytest.raises(UnknownName):
        repmod.module_by_name('W7', algebra)


def test_relation_violation_is_named(algebra):
    mats = {h: m.copy() for h, m in repmod.character(0, algebra).gen_action.items()}
    mats['x'] = linalg.matrix([[2]])
    with pytest.raises(RelationViolated) as e:
        repmod.module_from_generators(mats, algebra)
    assert e.value.relation == 'x^2 = 1 - g^2'


def test_ext_between_characters(characters):
    assert repmod.ext1(characters['K_chi^1'], characters['K_chi^0']).dim == 1
    assert repmod.ext1(characters['K_chi^5'], characters['K_chi^0']).dim == 1
    assert repmod.ext1(characters['K_chi^0'], characters['K_chi^0']).dim == 0
    assert repmod.ext1(characters['K_chi^3'], characters['K_chi^0']).dim == 0


def test_extension_middle_term(characters):
    result = repmod.ext1(characters['K_chi^1'], characters['K_chi^0'])
    E = result.extensions[0]
    assert E.dim == 2
    assert repmod.is_indecomposable(E)


def test_character_quiver_is_two_hexagons(characters):
    quiver = repmod.ext_quiver_and_type(characters)
    assert len(quiver.arrows) == 12
    assert quiver.separated_graph_type == 'tame'
    assert quiver.representation_type == repmod.UNDETERMINED
    assert dict(quiver.component_types()) == {'A5~': 2}
    assert quiver.bipartite()
    data = quiver.to_json()
    assert data['separated_graph_type'] == 'tame'
    assert data['representation_type'] == repmod.UNDETERMINED
    assert 'verdict' not in data
    assert quiver.to_dot().startswith('digraph ext_quiver {')


def test_double_has_nonzero_radical_square(algebra, characters):
    # a 4-dim indecomposable with simple top and socle has Loewy length >= 3
    P = repmod.projective_cover_P(algebra)
    st = repmod.socle_top(P, characters)
    assert P.dim == 4
    assert sum(st.socle.values()) == 1
    assert sum(st.top.values()) == 1


def test_wild_separated_graph_makes_the_algebra_wild():
    arrows = [('s%d' % i, 't%d' % j, 1) for i in range(3) for j in range(3)]
    quiver = repmod.QuiverGraph(['s%d' % i for i in range(3)] + ['t%d' % j for j in range(3)], arrows)
    assert quiver.separated_graph_type == 'wild'
    assert quiver.representation_type == 'wild'


def test_projective_cover(algebra, characters):
    P = repmod.projective_cover_P(algebra)
    assert P.dim == 4
    assert repmod.is_indecomposable(P)
    st = repmod.socle_top(P, characters)
    assert dict(st.socle) == {'K_chi^0': 1}
    assert dict(st.top) == {'K_chi^0': 1}
    assert [M.name for M in repmod.projective_modules(algebra, P)] == ['P_%d' % j for j in range(6)]


def test_printed_projective_fails_relations(algebra, tables):
    report = repmod.printed_projective_check(algebra, tables['printed_modules']['P'])
    assert not report.passed


@pytest.mark.parametrize('l', range(6))
def test_two_dim_non_simple_family(algebra, l):
    cls = repmod.classify_two_dim_nonsimple(l, algebra)
    assert cls.plus.name == 'M_%d^+' % l
    assert cls.minus.name == 'M_%d^-' % l
    assert cls.plus_minus_violation is not None
    assert all(repmod.is_indecomposable(M) for M in (cls.plus, cls.minus))
    assert cls.shifts[1].dim == 1
    assert cls.shifts[5].dim == 1
    assert cls.shifts[3].dim == 0


def test_split_family_is_rejected(algebra, monkeypatch):
    def split(l, algebra):
        return repmod.direct_sum(repmod.character(l, algebra), repmod.character(l + 1, algebra))
    monkeypatch.setattr(repmod, 'm_plus', split)
    with pytest.raises(NotIndecomposable):
        repmod.classify_two_dim_nonsimple(0, algebra)


def test_direct_sum_is_decomposable(characters):
    M = repmod.direct_sum(characters['K_chi^0'], characters['K_chi^1'])
    assert M.dim == 2
    assert not repmod.is_indecomposable(M)


def test_census_and_quiver_for_both_theta(signed_algebra):
    simples = repmod.simple_catalog(signed_algebra)
    assert len(simples) == 36
    assert sum(M.dim ** 2 for M in simples.values()) == 126
    characters = OrderedDict((M.name, M) for M in repmod.character_modules(signed_algebra))
    quiver = repmod.ext_quiver_and_type(characters)
    assert dict(quiver.component_types()) == {'A5~': 2}
    assert quiver.representation_type == repmod.UNDETERMINED


def test_ext_table_does_not_depend_on_threads(characters):
    assert repmod.ext_table(characters, threads=1) == repmod.ext_table(characters, threads=4)
