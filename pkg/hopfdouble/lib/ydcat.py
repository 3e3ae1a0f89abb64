"""
Yetter-Drinfeld modules over C from left D-modules, and their braidings.

A YDModule keeps one matrix per basis element of C for the action, and one
matrix F_p per basis element for the coaction, delta(v) = sum_p e_p (x) F_p v.
The coaction of a D-module M is read off the dual basis of C inside D:
F_p is the action of f_p # 1.

Braidings are matrices on V (x) W with the row-major index j * dim W + l for
v_j (x) w_l; c(v (x) w) = v_(-1).w (x) v_(0) lands in W (x) V.
"""
from collections import OrderedDict
import functools
import logging as log

import numpy as np

from ..config.hopf_config import table_coefficient
from .errors import CompatibilityFailed, NotCertified, SingularBraiding, SingularMatrix
from .hopfcore import AxiomReport
from .repmod import (character_modules, in_simple_index_set, module_by_name, projective_modules,
                     two_dim_simples)
from .scalars import ONE, ZERO, xi_power
from .util import linalg
from .util.TaskPool import run_tasks


class YDModule:
    """ Left-left Yetter-Drinfeld module over C """
    def __init__(self, C, action, coaction, name=None):
        self.C = C
        self.action = list(action)
        self.coaction = list(coaction)
        if len(self.action) != C.dim or len(self.coaction) != C.dim:
            raise ValueError('Expected %d action and coaction matrices' % C.dim)
        self.dim = self.action[0].shape[0]
        self.name = name or 'V'
        self.certified = False

    def act(self, h):
        """Matrix of an element of C given as a sparse vector"""
        acc = linalg.zeros(self.dim, self.dim)
        for i, s in h.items():
            acc = acc + linalg.scale(self.action[i], s)
        return acc

    def coaction_terms(self, k):
        """delta(v_k) as {(p, j): s} meaning sum of s * e_p (x) v_j"""
        out = {}
        for p, F in enumerate(self.coaction):
            for j in range(self.dim):
                if F[j, k]:
                    out[(p, j)] = F[j, k]
        return out

    def format_coaction(self, k):
        terms = []
        for (p, j), s in sorted(self.coaction_terms(k).items()):
            coef = '' if s == 1 else '(%s)' % s.to_literal()
            terms.append('%s%s⊗v%d' % (coef, self.C.basis[p], j + 1))
        return ' + '.join(terms) or '0'

    def to_json(self):
        return {
            'name': self.name,
            'dim': self.dim,
            'action': OrderedDict((self.C.basis[i], linalg.to_literals(m))
                                  for i, m in enumerate(self.action) if not linalg.is_zero(m)),
            'coaction': OrderedDict(('v%d' % (k + 1), self.format_coaction(k)) for k in range(self.dim)),
            'certified': self.certified,
        }

    def __repr__(self):
        return 'YDModule(%s, dim=%d)' % (self.name, self.dim)


def _action_matrices(M):
    """[a^i] and [b a^i] in the order of the basis of C"""
    a, b = M.gen_action['a'], M.gen_action['b']
    powers = [linalg.identity(M.dim)]
    for _ in range(5):
        powers.append(linalg.matmul(powers[-1], a))
    return powers + [linalg.matmul(b, p) for p in powers]


@functools.lru_cache(maxsize=4)
def _compatibility_terms(C):
    """For each h: {(p, h2, q): s} with delta(h.v)_p = sum s [h2] F_q v.

    The right hand side is h_(1) v_(-1) S(h_(3)) (x) h_(2) v_(0), expanded in the basis of C.
    """
    terms = []
    for h in range(C.dim):
        out = {}
        for (h1, h2, h3), s in C.delta2({h: ONE}).items():
            Sh3 = C.S({h3: ONE})
            for q in range(C.dim):
                for p, t in C.mul(C.mul({h1: ONE}, {q: ONE}), Sh3).items():
                    key = (p, h2, q)
                    val = out.get(key, ZERO) + s * t
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
        terms.append(out)
    return terms


def yd_report(V):
    """Comodule axioms, module structure and the YD compatibility law on every basis element of C"""
    C = V.C
    d = V.dim
    one = linalg.identity(d)
    report = AxiomReport('YD(%s)' % V.name, 'full')

    counit = linalg.zeros(d, d)
    for p, F in enumerate(V.coaction):
        if C.counit[p]:
            counit = counit + linalg.scale(F, C.counit[p])
    ok = linalg.is_zero(counit - one)
    report.add('comodule_counit', ok, None if ok else ('epsilon',), None if ok else linalg.to_literals(counit))

    lhs = {}
    for p, row in C.comult.items():
        for key, s in row.items():
            lhs[key] = lhs.get(key, linalg.zeros(d, d)) + linalg.scale(V.coaction[p], s)
    failure = None
    for p1 in range(C.dim):
        for p2 in range(C.dim):
            diff = lhs.get((p1, p2), linalg.zeros(d, d)) - linalg.matmul(V.coaction[p2], V.coaction[p1])
            if not linalg.is_zero(diff):
                failure = ((C.basis[p1], C.basis[p2]), linalg.to_literals(diff))
                break
        if failure:
            break
    report.add('comodule_coassociativity', failure is None, failure and failure[0], failure and failure[1])

    failure = None
    for i in range(C.dim):
        for j in range(C.dim):
            diff = linalg.matmul(V.action[i], V.action[j]) - V.act(C.mult.get((i, j), {}))
            if not linalg.is_zero(diff):
                failure = ((C.basis[i], C.basis[j]), linalg.to_literals(diff))
                break
        if failure:
            break
    if failure is None and not linalg.is_zero(V.action[0] - one):
        failure = (('1',), linalg.to_literals(V.action[0]))
    report.add('module_action', failure is None, failure and failure[0], failure and failure[1])

    products = {}
    failure = None
    for h, terms in enumerate(_compatibility_terms(C)):
        rhs = [linalg.zeros(d, d) for _ in range(C.dim)]
        for (p, h2, q), s in terms.items():
            m = products.get((h2, q))
            if m is None:
                m = linalg.matmul(V.action[h2], V.coaction[q])
                products[(h2, q)] = m
            rhs[p] = rhs[p] + linalg.scale(m, s)
        for p in range(C.dim):
            diff = linalg.matmul(V.coaction[p], V.action[h]) - rhs[p]
            if not linalg.is_zero(diff):
                v = next(k for k in range(d) if any(diff[:, k]))
                failure = ((C.basis[h], 'v%d' % (v + 1), C.basis[p]), linalg.to_literals(diff))
                break
        if failure:
            break
    report.add('yd_compatibility', failure is None, failure and failure[0], failure and failure[1])
    return report


def certify_yd(V):
    report = yd_report(V)
    if not report.passed:
        e = report.failed()[0]
        h, v = (e.witness[0], e.witness[1]) if e.witness and len(e.witness) > 1 else (e.witness, None)
        raise CompatibilityFailed(e.axiom, h, v)
    V.certified = True
    return report


def to_yd(M):
    """YD module over C of a left D-module: action restricted to C, coaction through f_p # 1"""
    algebra = M.algebra
    coaction = [M.act_poly(algebra.dual_coords(p)) for p in range(algebra.C.dim)]
    V = YDModule(algebra.C, _action_matrices(M), coaction, M.name)
    certify_yd(V)
    log.debug('%s is a certified YD module', V.name)
    return V


def yd_tensor(V, W, name=None):
    """V (x) W with the diagonal action and delta(v (x) w) = v_(-1) w_(-1) (x) v_(0) (x) w_(0)"""
    C = V.C
    dim = V.dim * W.dim
    action = []
    for h in range(C.dim):
        acc = linalg.zeros(dim, dim)
        for (h1, h2), s in C.comult.get(h, {}).items():
            acc = acc + linalg.scale(linalg.kron(V.action[h1], W.action[h2]), s)
        action.append(acc)
    coaction = [linalg.zeros(dim, dim) for _ in range(C.dim)]
    for (p, q), row in C.mult.items():
        block = None
        for r, s in row.items():
            block = block if block is not None else linalg.kron(V.coaction[p], W.coaction[q])
            coaction[r] = coaction[r] + linalg.scale(block, s)
    return YDModule(C, action, coaction, name or '%s⊗%s' % (V.name, W.name))


def yd_catalog(algebra, threads=1):
    """YD modules of the 36 simple modules and of P_0, ..., P_5, by name"""
    modules = list(character_modules(algebra)) + list(two_dim_simples(algebra).values())
    modules += projective_modules(algebra)
    yds = run_tasks(to_yd, modules, threads=threads, name='YD translations')
    return OrderedDict((V.name, V) for V in yds)


# Braidings

class BraidedSpace:
    """ Braided vector space of dimension d with c given as a d^2 x d^2 matrix """
    def __init__(self, matrix, dim, name=None):
        if matrix.shape != (dim * dim, dim * dim):
            raise ValueError('Braiding of a %d-dim space must be %d x %d' % (dim, dim * dim, dim * dim))
        self.matrix = matrix
        self.dim = dim
        self.name = name or 'V'
        self.certified = False

    def apply(self, v):
        return linalg.matmul(self.matrix, np.asarray(v))

    def tensor(self):
        """c as an array t[a', b', a, b] with c(v_a (x) v_b) = sum t[a', b', a, b] v_a' (x) v_b'"""
        d = self.dim
        return self.matrix.reshape(d, d, d, d)

    def image(self, r, s):
        """c(v_r (x) v_s), 0-based, as {(a, b): coef}"""
        d = self.dim
        col = self.matrix[:, r * d + s]
        return {(k // d, k % d): x for k, x in enumerate(col) if x}

    def is_invertible(self):
        return linalg.rank(self.matrix) == self.dim * self.dim

    def braid_residual(self):
        """(c (x) id)(id (x) c)(c (x) id) - (id (x) c)(c (x) id)(id (x) c) on V (x) V (x) V"""
        ident = linalg.identity(self.dim)
        c1 = linalg.kron(self.matrix, ident)
        c2 = linalg.kron(ident, self.matrix)
        left = linalg.matmul(linalg.matmul(c1, c2), c1)
        right = linalg.matmul(linalg.matmul(c2, c1), c2)
        return left - right

    def braid_relation_holds(self):
        return linalg.is_zero(self.braid_residual())

    def certify(self):
        if not self.is_invertible():
            raise SingularBraiding('Braiding of %s is not invertible' % self.name)
        if not self.braid_relation_holds():
            raise CompatibilityFailed('braid relation', v=self.name)
        self.certified = True
        return self

    def format_image(self, r, s):
        terms = []
        for (a, b), x in sorted(self.image(r, s).items()):
            coef = '' if x == 1 else '(%s)' % x.to_literal()
            terms.append('%sv%d⊗v%d' % (coef, a + 1, b + 1))
        return ' + '.join(terms) or '0'

    def to_json(self):
        d = self.dim
        return {
            'name': self.name,
            'dim': d,
            'matrix': linalg.to_literals(self.matrix),
            'images': OrderedDict(('v%d⊗v%d' % (r + 1, s + 1), self.format_image(r, s))
                                  for r in range(d) for s in range(d)),
        }

    def __repr__(self):
        return 'BraidedSpace(%s, dim=%d)' % (self.name, self.dim)


def braiding_between(V, W):
    """Matrix of c_{V,W}: V (x) W -> W (x) V"""
    dV, dW = V.dim, W.dim
    acc = linalg.zeros(dW * dV, dW * dV)
    for p in range(V.C.dim):
        if linalg.is_zero(V.coaction[p]):
            continue
        acc = acc + linalg.kron(W.action[p], V.coaction[p])
    # acc has input index l * dV + j; reorder to j * dW + l
    return np.ascontiguousarray(acc.reshape(dW, dV, dW, dV).transpose(0, 1, 3, 2).reshape(dW * dV, dV * dW))


def braiding_of(V):
    if not V.certified:
        raise NotCertified(V.name, 'yd')
    c = BraidedSpace(braiding_between(V, V), V.dim, V.name)
    try:
        return c.certify()
    except SingularMatrix:
        log.error('Braiding of %s is singular' % V.name)
        raise


# Printed tables

def braiding_from_table(rows, dim, constants, lam1=ONE, index=0, name=None):
    """Braiding from rows {'r,s': [{v: [a, b], ...coefficient keys}]}, missing rows are 0"""
    m = linalg.zeros(dim * dim, dim * dim)
    for key, terms in rows.items():
        r, s = (int(t) - 1 for t in str(key).split(','))
        for term in terms:
            a, b = (int(t) - 1 for t in term['v'])
            m[a * dim + b, r * dim + s] = m[a * dim + b, r * dim + s] + table_coefficient(term, constants, lam1, index)
    return BraidedSpace(m, dim, name)


def coaction_from_table(rows, C, dim, constants, lam1=ONE, index=0):
    """Coaction matrices from rows {vk: [{e: label, a3: n, v: j, ...coefficient keys}]}"""
    F = [linalg.zeros(dim, dim) for _ in range(C.dim)]
    for key, terms in rows.items():
        k = int(str(key).lstrip('v')) - 1
        for term in terms:
            coef = table_coefficient(term, constants, lam1, index)
            element = C.mul(C.e(str(term['e'])), C.power(C.e('a3'), int(term.get('a3', 0)) * index))
            j = int(term['v']) - 1
            for p, s in element.items():
                F[p][j, k] = F[p][j, k] + coef * s
    return F


def printed_braiding(i, j, tables, constants):
    """Printed braiding of V_{i,j} with Lambda_1 = xi^i"""
    if not in_simple_index_set(i, j):
        raise ValueError('V_{%d,%d} is not in the index set 3i != j mod 6' % (i, j))
    rows = tables['braidings']['two_dim']['j%d' % (j % 6)]
    return braiding_from_table(rows, 2, constants, lam1=xi_power(i), name='V_{%d,%d}' % (i % 6, j % 6))


def _compare(report, label, computed, printed, show):
    diff = computed - printed
    ok = linalg.is_zero(diff)
    report.add(label, ok, None if ok else (label,),
               None if ok else {'computed': show(computed), 'printed': show(printed)})
    if not ok:
        log.warning('Printed table disagrees for %s' % label)
    return ok


def verify_printed_braidings(algebra, tables, yds=None):
    """Computed braidings against the printed tables of V_{i,j}, P_j and the named modules"""
    yds = yds if yds is not None else yd_catalog(algebra)
    const = algebra.constants
    report = AxiomReport('printed braidings', 'tables')

    def show(m):
        return linalg.to_literals(m)
    for (i, j) in two_dim_simples(algebra):
        name = 'V_{%d,%d}' % (i, j)
        computed = braiding_of(yds[name])
        _compare(report, 'braiding %s' % name, computed.matrix, printed_braiding(i, j, tables, const).matrix, show)
    for j in range(6):
        name = 'P_%d' % j
        computed = braiding_of(yds[name])
        rows = tables['braidings']['projective']
        printed = braiding_from_table(rows, 4, const, index=j)
        for key in rows:
            r, s = (int(t) - 1 for t in str(key).split(','))
            col = r * 4 + s
            _compare(report, 'braiding %s row %s' % (name, key), computed.matrix[:, col],
                     printed.matrix[:, col], show)
    for short, rows in tables['braidings'].get('named', {}).items():
        M = module_by_name(short, algebra)
        V = yds.get(M.name) or to_yd(M)
        printed = braiding_from_table(rows, V.dim, const)
        _compare(report, 'braiding %s' % short, braiding_of(V).matrix, printed.matrix, show)
    log.info('Printed braidings: %d checked, %d disagree' % (len(report.entries), len(report.failed())))
    return report


def verify_printed_coactions(algebra, tables, yds=None):
    """Computed coactions against the printed tables of K_chi^i, V_{i,j}, P_j and the named modules"""
    yds = yds if yds is not None else yd_catalog(algebra)
    C = algebra.C
    const = algebra.constants
    report = AxiomReport('printed coactions', 'tables')
    section = tables['coactions']

    def show(F):
        return OrderedDict((C.basis[p], linalg.to_literals(m)) for p, m in enumerate(F) if not linalg.is_zero(m))

    def check(label, V, printed):
        diff = [a - b for a, b in zip(V.coaction, printed)]
        ok = all(linalg.is_zero(m) for m in diff)
        report.add(label, ok, None if ok else (label,),
                   None if ok else {'computed': show(V.coaction), 'printed': show(printed)})
        if not ok:
            log.warning('Printed table disagrees for %s' % label)
    for i in range(6):
        name = 'K_chi^%d' % i
        check('coaction %s' % name, yds[name], coaction_from_table(section['characters'], C, 1, const, index=i))
    for (i, j) in two_dim_simples(algebra):
        name = 'V_{%d,%d}' % (i, j)
        printed = coaction_from_table(section['two_dim']['j%d' % j], C, 2, const, lam1=xi_power(i))
        check('coaction %s' % name, yds[name], printed)
    for j in range(6):
        name = 'P_%d' % j
        check('coaction %s' % name, yds[name], coaction_from_table(section['projective'], C, 4, const, index=j))
    for short, rows in section.get('named', {}).items():
        M = module_by_name(short, algebra)
        V = yds.get(M.name) or to_yd(M)
        check('coaction %s' % short, V, coaction_from_table(rows, C, V.dim, const))
    log.info('Printed coactions: %d checked, %d disagree' % (len(report.entries), len(report.failed())))
    return report
