"""
Finite-dimensional left modules over D = D(C^cop), given by the matrices of the
generators a, b, g, x.

Matrices act on column vectors: entry (r, c) of [h] is the coefficient of v_r in
h.v_c, so that [hk] = [h][k].
"""
from collections import OrderedDict, namedtuple
import itertools
import logging as log
import re

import networkx as nx
import numpy as np

from ..config.hopf_config import table_scalar
from .catalog import build_C, build_D
from .errors import (DimensionMismatch, NotIndecomposable, PresentationMismatch, RelationViolated,
                     UnknownName, UnsupportedDimension)
from .hopfcore import AxiomReport, embed_left
from .scalars import ONE, XI, ZERO, as_scalar, named_constants, roots_in_field, xi_power
from .util import dynkin, linalg
from .util.linalg import SparseEchelon
from .util.TaskPool import run_tasks

DEFAULT_GRID = ('0', '1', '-1', 'x', '-x', '-1+x', '1-x')

IsoResult = namedtuple('IsoResult', 'verdict witness')
SocleTop = namedtuple('SocleTop', 'socle top')
ExtResult = namedtuple('ExtResult', 'dim cocycle_dim coboundary_rank cocycles extensions')
TwoDimClassification = namedtuple('TwoDimClassification', 'l plus minus plus_minus_violation shifts')


class DoubleAlgebra:
    """ D with its presentation, generator embedding and coordinates on the PBW monomials """
    def __init__(self, D, presentation, embedding, theta_sign='plus', C=None):
        self.D = D
        self.C = C
        self.presentation = presentation
        self.embedding = embedding
        self.theta_sign = theta_sign
        self.constants = named_constants(theta_sign)
        self.generators = list(presentation.generators)
        self._echelon = None
        self._basis_coords = {}
        self._coproducts = {}
        self._antipodes = {}
        self._dual_coords = {}

    @classmethod
    def build(cls, theta_sign='plus', C=None, full_check_max_dim=48):
        C = C or build_C(theta_sign)
        D, presentation, embedding = build_D(theta_sign, C=C, full_check_max_dim=full_check_max_dim)
        return cls(D, presentation, embedding, theta_sign, C)

    def _pbw_echelon(self):
        if self._echelon is None:
            n = self.D.dim
            words = self.presentation.pbw_monomials
            echelon = SparseEchelon(n + len(words))
            # columns past n record which monomials were combined
            for t, w in enumerate(words):
                v = dict(self.embedding.image({w: ONE}))
                v[n + t] = ONE
                echelon.add(v)
            self._echelon = echelon
        return self._echelon

    def pbw_coords(self, v):
        """{word: s} with v = sum of s * word in D"""
        n = self.D.dim
        rest = self._pbw_echelon().reduce(v)
        outside = {k: s for k, s in rest.items() if k < n}
        if outside:
            raise PresentationMismatch('PBW monomials span', self.D.format_element(outside))
        words = self.presentation.pbw_monomials
        return {words[k - n]: -s for k, s in rest.items()}

    def basis_coords(self, i):
        coords = self._basis_coords.get(i)
        if coords is None:
            coords = self.pbw_coords({i: ONE})
            self._basis_coords[i] = coords
        return coords

    def dual_coords(self, p):
        """PBW coordinates of f_p # 1, f_p the dual basis element of C at index p"""
        coords = self._dual_coords.get(p)
        if coords is None:
            coords = self.pbw_coords(embed_left(self.C, {p: ONE}))
            self._dual_coords[p] = coords
        return coords

    def generator_coproduct(self, h):
        """Delta(h) as {(word, word): s}"""
        out = self._coproducts.get(h)
        if out is None:
            out = {}
            for (i, j), s in self.D.comul(self.embedding.assignment[h]).items():
                for w1, c1 in self.basis_coords(i).items():
                    for w2, c2 in self.basis_coords(j).items():
                        val = out.get((w1, w2), ZERO) + s * c1 * c2
                        if val:
                            out[(w1, w2)] = val
                        else:
                            out.pop((w1, w2), None)
            self._coproducts[h] = out
        return out

    def generator_antipode(self, h):
        out = self._antipodes.get(h)
        if out is None:
            out = self.pbw_coords(self.D.S(self.embedding.assignment[h]))
            self._antipodes[h] = out
        return out


class ModuleRep:
    """ Left D-module of dimension d given by generator matrices """
    def __init__(self, algebra, gen_action, name=None):
        self.algebra = algebra
        self.gen_action = OrderedDict((h, gen_action[h]) for h in algebra.generators)
        self.dim = next(iter(self.gen_action.values())).shape[0]
        self.name = name or 'M'
        self._words = {(): linalg.identity(self.dim)}

    def act_word(self, w):
        m = self._words.get(w)
        if m is None:
            m = linalg.matmul(self.act_word(w[:-1]), self.gen_action[w[-1]])
            self._words[w] = m
        return m

    def act_poly(self, p):
        acc = linalg.zeros(self.dim, self.dim)
        for w, c in p.items():
            acc = acc + linalg.scale(self.act_word(w), c)
        return acc

    def act(self, v):
        """Matrix of an element of D given in D's basis"""
        return self.act_poly(self.algebra.pbw_coords(v))

    def to_json(self):
        return {
            'name': self.name,
            'dim': self.dim,
            'action': OrderedDict((h, linalg.to_literals(m)) for h, m in self.gen_action.items()),
        }

    def __repr__(self):
        return 'ModuleRep(%s, dim=%d)' % (self.name, self.dim)


def module_from_generators(mats, algebra, name=None):
    """Certified module; RelationViolated names the first relation that fails"""
    missing = [h for h in algebra.generators if h not in mats]
    if missing:
        raise DimensionMismatch('No matrix for generators %s' % ', '.join(missing))
    mats = OrderedDict((h, np.asarray(mats[h])) for h in algebra.generators)
    d = None
    for h, m in mats.items():
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch('Matrix of %s is not square' % h, actual=m.shape)
        if d is None:
            d = m.shape[0]
        elif m.shape[0] != d:
            raise DimensionMismatch('Matrix of %s has the wrong size' % h, expected=d, actual=m.shape[0])
    algebra.presentation.check_matrices(mats)
    return ModuleRep(algebra, mats, name)


# Simple modules

def character(i, algebra):
    """K_chi^i: a -> xi^i, b -> 0, g -> (-1)^i, x -> 0"""
    i %= 6
    mats = {
        'a': linalg.matrix([[xi_power(i)]]),
        'b': linalg.matrix([[0]]),
        'g': linalg.matrix([[(-1) ** i]]),
        'x': linalg.matrix([[0]]),
    }
    return module_from_generators(mats, algebra, 'K_chi^%d' % i)


def character_modules(algebra):
    return [character(i, algebra) for i in range(6)]


def one_dim_solutions(algebra):
    """All (a, b, g, x) in K^4 annihilating the relations.

    Candidates come from the one-variable relations a^6 = 1, b^2 = 0, g^6 = 1 and
    x^2 = 1 - g^2; the remaining relations are then checked exactly.
    """
    sixth_roots = roots_in_field([-1, 0, 0, 0, 0, 0, 1])
    solutions = []
    for a, g in itertools.product(sixth_roots, sixth_roots):
        for x in roots_in_field([g * g - 1, 0, 1]):
            values = {'a': a, 'b': ZERO, 'g': g, 'x': x}
            mats = {h: linalg.matrix([[v]]) for h, v in values.items()}
            try:
                algebra.presentation.check_matrices(mats)
            except RelationViolated:
                continue
            solutions.append(values)
    return solutions


def in_simple_index_set(i, j):
    return (3 * i - j) % 6 != 0


def two_dim_simple(i, j, algebra):
    """V_{i,j} for 3i != j mod 6"""
    i %= 6
    j %= 6
    if not in_simple_index_set(i, j):
        raise ValueError('(%d, %d) has 3i = j mod 6' % (i, j))
    theta = algebra.constants.theta
    l1 = xi_power(i)
    l2 = xi_power(j)
    x12 = theta.inverse() * xi_power(2) * l1.inverse() * (l1 ** 3 + l2)
    x21 = theta * xi_power(-2) * l1 * (l1 ** 3 - l2)
    mats = {
        'a': linalg.diag([l1, XI * l1]),
        'b': linalg.matrix([[0, 1], [0, 0]]),
        'g': linalg.diag([l2, -l2]),
        'x': linalg.matrix([[0, x12], [x21, 0]]),
    }
    return module_from_generators(mats, algebra, 'V_{%d,%d}' % (i, j))


def two_dim_simples(algebra):
    """OrderedDict (i, j) -> V_{i,j}"""
    return OrderedDict(((i, j), two_dim_simple(i, j, algebra))
                       for i in range(6) for j in range(6) if in_simple_index_set(i, j))


def simple_catalog(algebra):
    """The 36 simple modules by name"""
    simples = OrderedDict((M.name, M) for M in character_modules(algebra))
    simples.update((M.name, M) for M in two_dim_simples(algebra).values())
    return simples


def dual_simple_index(i, j):
    return (-i - 1) % 6, (-j - 3) % 6


# Constructions

def direct_sum(M, N, name=None):
    mats = {}
    for h in M.algebra.generators:
        m = linalg.zeros(M.dim + N.dim, M.dim + N.dim)
        m[:M.dim, :M.dim] = M.gen_action[h]
        m[M.dim:, M.dim:] = N.gen_action[h]
        mats[h] = m
    return module_from_generators(mats, M.algebra, name or '%s+%s' % (M.name, N.name))


def tensor_module(M, N, name=None):
    """M (x) N with h acting through Delta_D(h)"""
    algebra = M.algebra
    mats = {}
    for h in algebra.generators:
        acc = linalg.zeros(M.dim * N.dim, M.dim * N.dim)
        for (w1, w2), c in algebra.generator_coproduct(h).items():
            acc = acc + linalg.scale(linalg.kron(M.act_word(w1), N.act_word(w2)), c)
        mats[h] = acc
    return module_from_generators(mats, algebra, name or '%s⊗%s' % (M.name, N.name))


def dual_module(M, name=None):
    """M* with (h.f)(v) = f(S(h).v)"""
    algebra = M.algebra
    mats = {h: linalg.transpose(M.act_poly(algebra.generator_antipode(h))) for h in algebra.generators}
    return module_from_generators(mats, algebra, name or M.name + '*')


# Homomorphisms

def hom_space(M, N):
    """Basis of {T : N.dim x M.dim, [h]_N T = T [h]_M for all generators h}"""
    dM, dN = M.dim, N.dim
    blocks = []
    for h in M.algebra.generators:
        blocks.append(linalg.kron(N.gen_action[h], linalg.identity(dM))
                      - linalg.kron(linalg.identity(dN), linalg.transpose(M.gen_action[h])))
    system = linalg.vstack(blocks, dN * dM)
    return [v.reshape(dN, dM) for v in linalg.nullspace(system)]


def _invertible(T):
    return T.shape[0] == T.shape[1] and linalg.rank(T) == T.shape[0]


def is_isomorphic(M, N, grid=DEFAULT_GRID):
    """IsoResult('yes', T) with T invertible, IsoResult('no', None) or IsoResult('inconclusive', None)"""
    if M.dim != N.dim:
        return IsoResult('no', None)
    basis = hom_space(M, N)
    if not basis:
        return IsoResult('no', None)
    for T in basis:
        if _invertible(T):
            return IsoResult('yes', T)
    if len(basis) == 1:
        return IsoResult('no', None)
    coefs = [c for c in (as_scalar(g) for g in grid) if c]
    for T1, T2 in itertools.combinations(basis, 2):
        for c in coefs:
            T = T1 + linalg.scale(T2, c)
            if _invertible(T):
                return IsoResult('yes', T)
    log.warning('No invertible intertwiner %s -> %s on the coefficient grid' % (M.name, N.name))
    return IsoResult('inconclusive', None)


def _common_eigenvector(mats):
    """Some v with every matrix in mats mapping v into K v, for 2 x 2 matrices"""
    moving = [m for m in mats if not linalg.is_zero(m - linalg.scale(linalg.identity(2), m[0, 0]))]
    if not moving:
        return linalg.vector([1, 0])
    m = moving[0]
    for lam in roots_in_field(linalg.charpoly(m)):
        for v in linalg.nullspace(m - linalg.scale(linalg.identity(2), lam)):
            if all(not (v[0] * w[1] - v[1] * w[0]) for w in (n.dot(v) for n in moving)):
                return v
    return None


def is_simple(M):
    if M.dim == 1:
        return True
    if M.dim != 2:
        raise UnsupportedDimension('Simplicity test handles dimensions 1 and 2, got %d' % M.dim)
    return _common_eigenvector(list(M.gen_action.values())) is None


def endomorphism_radical(M):
    """(dim End(M), dim rad End(M)); the radical is the kernel of the trace form"""
    basis = hom_space(M, M)
    r = len(basis)
    if r <= 1:
        return r, 0
    frame = np.column_stack([linalg.flatten(E) for E in basis])

    def coords(X):
        c = linalg.solve(frame, linalg.flatten(X))
        if c is None:
            raise PresentationMismatch('End(%s) closed under composition' % M.name)
        return c
    structure = [[coords(linalg.matmul(Ei, Ej)) for Ej in basis] for Ei in basis]
    left_traces = [sum((structure[k][m][m] for m in range(r)), ZERO) for k in range(r)]
    form = linalg.zeros(r, r)
    for i in range(r):
        for j in range(r):
            form[i, j] = sum((structure[i][j][k] * left_traces[k] for k in range(r)), ZERO)
    return r, len(linalg.nullspace(form))


def is_indecomposable(M):
    r, rad = endomorphism_radical(M)
    return r - rad == 1


def socle_top(M, simples):
    """Multiplicities of the simple modules in the socle and in the top of M"""
    socle = OrderedDict()
    top = OrderedDict()
    for name, S in simples.items():
        n = len(hom_space(S, M))
        if n:
            socle[name] = n
        n = len(hom_space(M, S))
        if n:
            top[name] = n
    return SocleTop(socle, top)


# Projective modules

def projective_cover_P(algebra):
    """Projective cover of the trivial module, socle and top K_eps"""
    theta = algebra.constants.theta
    b = linalg.zeros(4, 4)
    b[2, 0] = theta
    b[3, 1] = ONE
    x = linalg.zeros(4, 4)
    x[1, 0] = theta
    x[2, 0] = as_scalar(2)
    x[3, 1] = 2 * theta
    x[3, 2] = -xi_power(2)
    mats = {
        'a': linalg.diag([1, XI, xi_power(-1), 1]),
        'b': b,
        'g': linalg.diag([1, -1, -1, 1]),
        'x': x,
    }
    return module_from_generators(mats, algebra, 'P')


def projective_modules(algebra, P=None):
    """P_j = P (x) K_chi^j for j in Z6"""
    P = P or projective_cover_P(algebra)
    return [tensor_module(P, character(j, algebra), name='P_%d' % j) for j in range(6)]


def table_matrix(entries, d, theta):
    """d x d matrix from 1-based [row, col, value] entries"""
    m = linalg.zeros(d, d)
    for row, col, value in entries:
        m[int(row) - 1, int(col) - 1] = table_scalar(value, theta)
    return m


def printed_projective_check(algebra, printed):
    """Evaluate the relations of D on the printed matrices of P.

    `printed` maps each generator to its sparse entries; entries absent from it are 0.
    """
    theta = algebra.constants.theta
    mats = OrderedDict((h, table_matrix(printed.get(h, []), 4, theta)) for h in algebra.generators)
    corrected = projective_cover_P(algebra)
    report = AxiomReport('printed P', 'relations')
    for label, rel in algebra.presentation.relations.items():
        residual = algebra.presentation.evaluate_matrices(rel, mats)
        ok = linalg.is_zero(residual)
        report.add(label, ok, None if ok else (label,), None if ok else linalg.to_literals(residual))
    for h in algebra.generators:
        diff = mats[h] - corrected.gen_action[h]
        ok = linalg.is_zero(diff)
        report.add('[%s] agrees with the certified P' % h, ok, None,
                   None if ok else linalg.to_literals(diff))
    failed = [e.axiom for e in report.failed()]
    if failed:
        log.warning('Printed P fails: %s' % ', '.join(failed))
    return report


# Extensions

def _vec_map(A, B):
    """Matrix of X -> A X B on row-major vectorizations"""
    return linalg.kron(A, linalg.transpose(B))


def _linearized_relations(T, S):
    """Off-diagonal block of every relation on [[T, X], [0, S]], linear in the blocks X_h"""
    gens = T.algebra.generators
    block = T.dim * S.dim
    rows = []
    for rel in T.algebra.presentation.relations.values():
        m = linalg.zeros(block, len(gens) * block)
        for w, c in rel.items():
            for k, h in enumerate(w):
                off = gens.index(h) * block
                term = linalg.scale(_vec_map(T.act_word(w[:k]), S.act_word(w[k + 1:])), c)
                m[:, off:off + block] = m[:, off:off + block] + term
        rows.append(m)
    return linalg.vstack(rows, len(gens) * block)


def _coboundaries(T, S):
    """Columns span {X_h = [h]_T H - H [h]_S}"""
    gens = T.algebra.generators
    block = T.dim * S.dim
    m = linalg.zeros(len(gens) * block, block)
    for n, h in enumerate(gens):
        m[n * block:(n + 1) * block, :] = (_vec_map(T.gen_action[h], linalg.identity(S.dim))
                                           - _vec_map(linalg.identity(T.dim), S.gen_action[h]))
    return m


def extension_module(T, S, cocycle, name=None):
    """[[T, X], [0, S]] with the blocks X_h read from a cocycle vector"""
    dT, dS = T.dim, S.dim
    block = dT * dS
    mats = {}
    for n, h in enumerate(T.algebra.generators):
        m = linalg.zeros(dT + dS, dT + dS)
        m[:dT, :dT] = T.gen_action[h]
        m[dT:, dT:] = S.gen_action[h]
        m[:dT, dT:] = np.asarray(cocycle[n * block:(n + 1) * block]).reshape(dT, dS)
        mats[h] = m
    return module_from_generators(mats, T.algebra, name or 'E(%s, %s)' % (S.name, T.name))


def ext1(S, T, middle_terms=True):
    """Ext^1(S, T) classifying 0 -> T -> E -> S -> 0"""
    cocycles = linalg.nullspace(_linearized_relations(T, S))
    bound = _coboundaries(T, S)
    echelon = SparseEchelon(bound.shape[0])
    for c in range(bound.shape[1]):
        echelon.add(linalg.to_sparse(bound[:, c]))
    coboundary_rank = echelon.rank
    reps = [z for z in cocycles if echelon.add(linalg.to_sparse(z))]
    extensions = []
    if middle_terms:
        extensions = [extension_module(T, S, z) for z in reps]
    return ExtResult(len(reps), len(cocycles), coboundary_rank, reps, extensions)


def ext_table(simples, threads=1):
    """{(S name, T name): dim Ext^1(S, T)} over ordered pairs of simples"""
    pairs = list(itertools.product(simples, repeat=2))
    dims = run_tasks(lambda p: ext1(simples[p[0]], simples[p[1]], middle_terms=False).dim,
                     pairs, threads=threads, name='ext1 pairs')
    return OrderedDict(zip(pairs, dims))


UNDETERMINED = 'undetermined by the separated-quiver criterion'


class QuiverGraph:
    """ Ext quiver (arrow S -> T when Ext^1(S, T) != 0) and its separated graph.

    The separated graph decides the type of the radical-square-zero quotient only.
    A wild quotient makes the algebra wild; otherwise its type is left undetermined.
    """
    def __init__(self, vertices, arrows):
        self.vertices = list(vertices)
        self.arrows = list(arrows)
        self.separated = nx.MultiGraph()
        for v in self.vertices:
            self.separated.add_node(v)
            self.separated.add_node(v + "'")
        for src, dst, mult in self.arrows:
            for _ in range(mult):
                self.separated.add_edge(src, dst + "'")
        self.separated_graph_type, self.components = dynkin.classify_graph(self.separated)
        self.representation_type = 'wild' if self.separated_graph_type == 'wild' else UNDETERMINED

    def bipartite(self):
        return nx.is_bipartite(nx.Graph(self.separated))

    def component_types(self):
        counts = OrderedDict()
        for c in self.components:
            key = c.type or c.kind
            counts[key] = counts.get(key, 0) + 1
        return counts

    def to_json(self):
        return {
            'vertices': self.vertices,
            'arrows': [[s, d, m] for s, d, m in self.arrows],
            'separated_components': [{'kind': c.kind, 'type': c.type, 'vertices': c.vertices}
                                     for c in self.components],
            'separated_graph_type': self.separated_graph_type,
            'representation_type': self.representation_type,
        }

    def to_dot(self):
        lines = ['digraph ext_quiver {']
        for v in self.vertices:
            lines.append('  "%s";' % v)
        for s, d, m in self.arrows:
            label = ' [label="%d"]' % m if m > 1 else ''
            lines.append('  "%s" -> "%s"%s;' % (s, d, label))
        lines.append('}')
        return '\n'.join(lines) + '\n'


def ext_quiver_and_type(simples, table=None, threads=1):
    table = table if table is not None else ext_table(simples, threads)
    arrows = [(s, t, n) for (s, t), n in table.items() if n]
    quiver = QuiverGraph(list(simples), arrows)
    log.info('Ext quiver: %d arrows, separated graph %s (%s), representation type %s'
             % (len(arrows), dict(quiver.component_types()), quiver.separated_graph_type,
                quiver.representation_type))
    return quiver


# Two-dimensional non-simple modules

def _shifted_characters(l, shift, algebra):
    lam, mu = character(l, algebra), character(l + shift, algebra)
    return {h: (lam.gen_action[h][0, 0], mu.gen_action[h][0, 0]) for h in algebra.generators}


def _upper(diag, corner):
    return linalg.matrix([[diag[0], corner], [0, diag[1]]])


def m_plus(l, algebra):
    """Socle K_chi^l, top K_chi^(l+1)"""
    theta = algebra.constants.theta
    ch = _shifted_characters(l, 1, algebra)
    mats = {
        'a': _upper(ch['a'], 0),
        'b': _upper((0, 0), -theta ** 3),
        'g': _upper(ch['g'], 0),
        'x': _upper((0, 0), 2 * XI * ch['a'][0] ** 2),
    }
    return module_from_generators(mats, algebra, 'M_%d^+' % (l % 6))


def m_minus(l, algebra):
    """Socle K_chi^l, top K_chi^(l-1)"""
    ch = _shifted_characters(l, -1, algebra)
    mats = {
        'a': _upper(ch['a'], 0),
        'b': _upper((0, 0), 0),
        'g': _upper(ch['g'], 0),
        'x': _upper((0, 0), 1),
    }
    return module_from_generators(mats, algebra, 'M_%d^-' % (l % 6))


def m_plus_minus_matrices(l, algebra, shift=3):
    """The listed matrices of the family with top K_chi^(l+3); they are not a module"""
    theta = algebra.constants.theta
    ch = _shifted_characters(l, shift, algebra)
    return {
        'a': _upper(ch['a'], 0),
        'b': _upper((0, 0), theta),
        'g': _upper(ch['g'], 0),
        'x': _upper((0, 0), 2 * XI * ch['a'][0] ** 2),
    }


def classify_two_dim_nonsimple(l, algebra, characters=None):
    """Non-split extensions of one character by another, with socle K_chi^l.

    Every shift m in Z6 of the top K_chi^(l+m) is solved; the certified families
    are M_l^+ (m = 1) and M_l^- (m = 5). Raises NotIndecomposable if either splits.
    """
    l %= 6
    chars = characters or character_modules(algebra)
    plus = m_plus(l, algebra)
    minus = m_minus(l, algebra)
    for M in (plus, minus):
        if not is_indecomposable(M):
            raise NotIndecomposable(M.name)
    violation = None
    try:
        module_from_generators(m_plus_minus_matrices(l, algebra), algebra)
    except RelationViolated as e:
        violation = e.relation
        log.debug('M_%d^(+-) violates %s', l, e.relation)
    shifts = OrderedDict((m, ext1(chars[(l + m) % 6], chars[l])) for m in range(6))
    return TwoDimClassification(l, plus, minus, violation, shifts)


# Lookup by name

_NAME_PATTERNS = (
    (re.compile(r'^(?:K_chi\^|K)(\d)$'), 'character'),
    (re.compile(r'^(?:V_\{(\d),(\d)\}|V(\d)(\d))$'), 'two_dim'),
    (re.compile(r'^P(?:_?(\d))?$'), 'projective'),
    (re.compile(r'^M_?(\d)\^?([+-])$'), 'nonsimple'),
)


def module_by_name(name, algebra):
    """K_chi^i (K1), V_{i,j} (V31), P, P_j (P2), M_l^+ and M_l^- (M0+)"""
    for pattern, kind in _NAME_PATTERNS:
        m = pattern.match(name.strip())
        if not m:
            continue
        digits = [int(g) for g in m.groups() if g is not None and g not in '+-']
        if kind == 'character':
            return character(digits[0], algebra)
        if kind == 'two_dim':
            i, j = digits
            if not in_simple_index_set(i, j):
                raise UnknownName('V_{%d,%d} is not simple: 3i = j mod 6' % (i, j))
            return two_dim_simple(i, j, algebra)
        if kind == 'projective':
            if not digits:
                return projective_cover_P(algebra)
            return tensor_module(projective_cover_P(algebra), character(digits[0], algebra),
                                 name='P_%d' % (digits[0] % 6))
        if m.group(2) == '+':
            return m_plus(digits[0], algebra)
        return m_minus(digits[0], algebra)
    raise UnknownName('Unknown module %s (expected K_chi^i, V_{i,j}, P, P_j, M_l^+ or M_l^-)' % name)
