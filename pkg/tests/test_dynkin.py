import networkx as nx
import pytest

from hopfdouble.lib.util import dynkin


def star(arms):
    g = nx.Graph()
    g.add_node('c')
    for a, n in enumerate(arms):
        prev = 'c'
        for k in range(n):
            v = '%d.%d' % (a, k)
            g.add_edge(prev, v)
            prev = v
    return g


@pytest.mark.parametrize('graph, kind, label', [
    (nx.path_graph(5), 'dynkin', 'A5'),
    (nx.cycle_graph(6), 'affine', 'A5~'),
    (star([1, 1, 1, 1]), 'affine', 'D4~'),
    (star([1, 1, 2]), 'dynkin', 'D5'),
    (star([1, 2, 2]), 'dynkin', 'E6'),
    (star([2, 2, 2]), 'affine', 'E6~'),
    (star([1, 3, 3]), 'affine', 'E7~'),
    (star([1, 2, 5]), 'affine', 'E8~'),
    (star([2, 2, 3]), 'wild', None),
    (nx.complete_bipartite_graph(3, 3), 'wild', None),
])
def test_classify_component(graph, kind, label):
    c = dynkin.classify_component(graph)
    assert (c.kind, c.type) == (kind, label)


def test_double_edge_is_kronecker():
    g = nx.MultiGraph()
    g.add_edge(0, 1)
    g.add_edge(0, 1)
    assert dynkin.classify_component(g).type == 'A1~'


def test_two_hexagons_are_tame():
    g = nx.disjoint_union(nx.cycle_graph(6), nx.cycle_graph(6))
    g.add_node('isolated')
    verdict, components = dynkin.classify_graph(g)
    assert verdict == 'tame'
    assert sorted(c.type for c in components) == ['A1', 'A5~', 'A5~']


def test_wild_component_dominates():
    g = nx.disjoint_union(nx.path_graph(3), nx.complete_bipartite_graph(3, 3))
    verdict, _ = dynkin.classify_graph(g)
    assert verdict == 'wild'
