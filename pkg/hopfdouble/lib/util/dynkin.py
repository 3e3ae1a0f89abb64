"""
Recognition of Dynkin and affine (extended Dynkin) diagrams among finite
undirected multigraphs.

classify_component returns a pair (kind, type) with kind one of 'dynkin',
'affine' or 'wild' and type a label such as 'A5', 'D4', 'E6~' or None.
"""
from collections import namedtuple

import networkx as nx

ComponentType = namedtuple('ComponentType', 'kind type vertices')


def _edge_multiplicities(g):
    counts = {}
    for u, v in g.edges():
        if u == v:
            return None
        key = frozenset((u, v))
        counts[key] = counts.get(key, 0) + 1
    return counts


def _arms(g, center):
    """Lengths of the paths leaving a branch vertex of a tree"""
    lengths = []
    for start in g.neighbors(center):
        prev, cur, n = center, start, 1
        while g.degree[cur] == 2:
            nxt = [w for w in g.neighbors(cur) if w != prev][0]
            prev, cur, n = cur, nxt, n + 1
        if g.degree[cur] > 2:
            return None
        lengths.append(n)
    return sorted(lengths)


def _star_type(p, q, r):
    """Tree with one branch vertex and arms of p <= q <= r vertices"""
    if p == 1 and q == 1:
        return 'dynkin', 'D%d' % (r + 3)
    if (p, q) == (1, 2) and r in (2, 3, 4):
        return 'dynkin', 'E%d' % (r + 4)
    if (p, q, r) == (2, 2, 2):
        return 'affine', 'E6~'
    if (p, q, r) == (1, 3, 3):
        return 'affine', 'E7~'
    if (p, q, r) == (1, 2, 5):
        return 'affine', 'E8~'
    return 'wild', None


def _tree_type(g):
    n = g.number_of_nodes()
    degrees = dict(g.degree)
    branch = [v for v, d in degrees.items() if d > 2]
    if not branch:
        return 'dynkin', 'A%d' % n
    if len(branch) == 1:
        c = branch[0]
        if degrees[c] == 4:
            if n == 5:
                return 'affine', 'D4~'
            return 'wild', None
        if degrees[c] > 4:
            return 'wild', None
        arms = _arms(g, c)
        if arms is None:
            return 'wild', None
        return _star_type(*arms)
    if len(branch) == 2 and all(degrees[v] == 3 for v in branch):
        # D~n: both branch vertices carry two leaves
        for v in branch:
            leaves = [w for w in g.neighbors(v) if degrees[w] == 1]
            if len(leaves) != 2:
                return 'wild', None
        return 'affine', 'D%d~' % (n - 1)
    return 'wild', None


def classify_component(g):
    """Type of a connected multigraph"""
    n = g.number_of_nodes()
    vertices = sorted(g.nodes(), key=str)
    if n == 0:
        return ComponentType('dynkin', None, vertices)
    counts = _edge_multiplicities(g)
    if counts is None:
        # loops
        if n == 1 and g.number_of_edges() == 1:
            return ComponentType('affine', 'A0~', vertices)
        return ComponentType('wild', None, vertices)
    if any(m > 1 for m in counts.values()):
        if n == 2 and list(counts.values()) == [2]:
            return ComponentType('affine', 'A1~', vertices)
        return ComponentType('wild', None, vertices)
    simple = nx.Graph(g)
    if nx.is_tree(simple):
        kind, label = _tree_type(simple)
        return ComponentType(kind, label, vertices)
    if n >= 3 and {d for _, d in simple.degree} == {2}:
        return ComponentType('affine', 'A%d~' % (n - 1), vertices)
    return ComponentType('wild', None, vertices)


def classify_graph(g):
    """Per-component types and the overall verdict finite / tame / wild"""
    components = [classify_component(g.subgraph(c).copy()) for c in nx.connected_components(g)]
    components.sort(key=lambda c: (c.kind != 'affine', c.kind != 'wild', c.vertices[0] if c.vertices else ''))
    kinds = {c.kind for c in components}
    if 'wild' in kinds:
        verdict = 'wild'
    elif 'affine' in kinds:
        verdict = 'tame'
    else:
        verdict = 'finite'
    return verdict, components
