"""
Concrete algebras: the pointed algebras A0, A1, B0, B1 of dimension 12, the
non-pointed algebra C = A1*, the isomorphism phi: A1 -> C*, and the Drinfeld
double D = D(C^cop) with its presentation on generators a, b, g, x.

Frozen basis orders:
  pointed   1, g, ..., g5, x, gx, ..., g5x
  C         1, a, ..., a5, b, ba, ..., ba5
  D         index 12 * (dual index) + (C index)
"""
from collections import OrderedDict
import logging as log

from .errors import AxiomFailed, PresentationMismatch, RelationViolated, UnknownName
from .hopfcore import (AxiomReport, FinDimHopf, HopfMorphism, drinfeld_double, dual_hopf, embed_left,
                       embed_right, variant, verify_hopf)
from .scalars import ONE, XI, ZERO, as_scalar, named_constants, xi_power
from .util import linalg
from .util.linalg import SparseEchelon, axpy
from .util.Rewriting import evaluate, padd, poly, pscale, word

POINTED_BASIS = ['1', 'g', 'g2', 'g3', 'g4', 'g5', 'x', 'gx', 'g2x', 'g3x', 'g4x', 'g5x']
C_BASIS = ['1', 'a', 'a2', 'a3', 'a4', 'a5', 'b', 'ba', 'ba2', 'ba3', 'ba4', 'ba5']

# name -> (q with gx = q xg, s with Delta(x) = x(x)1 + g^s(x)x, x^2 = 1 - g^2 or 0)
POINTED_PARAMS = {
    'A0': (-1, 1, False),
    'A1': (-1, 1, True),
    'B0': (-1, 3, False),
    'B1': (XI, 3, False),
}

CATALOG_NAMES = ('A0', 'A1', 'B0', 'B1', 'C', 'Cdual', 'D', 'Z2', 'K')


def _require(H, full_check_max_dim=48):
    report = verify_hopf(H, 'hopf', full_check_max_dim)
    if not report.passed:
        raise AxiomFailed(report)
    return H


def build_pointed(name):
    """Pointed Hopf algebra <g, x | g^6 = 1, gx = q xg, x^2 = 0 or 1 - g^2>"""
    if name not in POINTED_PARAMS:
        raise UnknownName('Unknown pointed algebra %s' % name)
    q, s, deformed = POINTED_PARAMS[name]
    q = as_scalar(q)
    mult = {}
    for i in range(6):
        for j in range(6):
            qj = q ** (-j)
            mult[(i, j)] = {(i + j) % 6: ONE}
            mult[(i, 6 + j)] = {6 + (i + j) % 6: ONE}
            mult[(6 + i, j)] = {6 + (i + j) % 6: qj}
            if deformed:
                mult[(6 + i, 6 + j)] = {(i + j) % 6: qj, (i + j + 2) % 6: -qj}
    comult = {}
    antipode = {}
    for i in range(6):
        comult[i] = {(i, i): ONE}
        comult[6 + i] = {(6 + i, i): ONE, ((i + s) % 6, 6 + i): ONE}
        antipode[i] = {(-i) % 6: ONE}
        antipode[6 + i] = {6 + (-i - s) % 6: -(q ** i)}
    counit = [ONE] * 6 + [ZERO] * 6
    H = FinDimHopf(name, POINTED_BASIS, mult, {0: ONE}, comult, counit, antipode,
                   generators={'g': {1: ONE}, 'x': {6: ONE}})
    return _require(H)


def build_C(theta_sign='plus'):
    """C = A1*: a^6 = 1, b^2 = 0, ba = xi ab; coproduct generated by Delta(a), Delta(b)"""
    lam_inv = named_constants(theta_sign).lam.inverse()
    mult = {}
    for i in range(6):
        for j in range(6):
            mult[(i, j)] = {(i + j) % 6: ONE}
            mult[(i, 6 + j)] = {6 + (i + j) % 6: xi_power(-i)}
            mult[(6 + i, j)] = {6 + (i + j) % 6: ONE}
    algebra = FinDimHopf('C', C_BASIS, mult, {0: ONE}, {}, [ZERO] * 12)
    delta_a = {(1, 1): ONE, (6, 9): lam_inv}
    delta_b = {(6, 4): ONE, (1, 6): ONE}
    comult = {0: {(0, 0): ONE}}
    power = {(0, 0): ONE}
    for k in range(1, 6):
        power = algebra.tensor_mul(power, delta_a)
        comult[k] = power
    power = {(0, 0): ONE}
    for k in range(6):
        comult[6 + k] = algebra.tensor_mul(delta_b, power)
        power = algebra.tensor_mul(power, delta_a)
    antipode = {}
    for k in range(6):
        antipode[k] = {(-k) % 6: ONE}
        antipode[6 + k] = {6 + (1 - k) % 6: xi_power(k - 2)}
    counit = [ONE] * 6 + [ZERO] * 6
    H = FinDimHopf('C', C_BASIS, mult, {0: ONE}, comult, counit, antipode,
                   generators={'a': {1: ONE}, 'b': {6: ONE}})
    return _require(H)


def group_algebra(n, name=None):
    """K[Z_n] on basis 1, t, ..., t^(n-1)"""
    mult = {(i, j): {(i + j) % n: ONE} for i in range(n) for j in range(n)}
    comult = {i: {(i, i): ONE} for i in range(n)}
    antipode = {i: {(-i) % n: ONE} for i in range(n)}
    basis = ['1'] + ['t%s' % ('' if i == 1 else i) for i in range(1, n)]
    H = FinDimHopf(name or 'K[Z%d]' % n, basis, mult, {0: ONE}, comult, [ONE] * n, antipode,
                   generators={'t': {1 % n: ONE}} if n > 1 else {})
    return _require(H)


def trivial_hopf():
    return group_algebra(1, name='K')


class PresentedAlgebra:
    """ Generators and relations (noncommutative polynomials), with PBW monomials asserted to span """
    def __init__(self, name, generators, relations, pbw_monomials=None):
        self.name = name
        self.generators = list(generators)
        self.relations = OrderedDict(relations)
        self.pbw_monomials = list(pbw_monomials or [])

    def evaluate_matrices(self, p, mats):
        d = next(iter(mats.values())).shape[0]
        zero = linalg.zeros(d, d)

        def add(acc, value, coef):
            acc = zero if acc is None else acc
            return acc + linalg.scale(value, coef)
        out = evaluate(p, mats, linalg.matmul, linalg.identity(d), add)
        return zero if out is None else out

    def check_matrices(self, mats):
        """Raise RelationViolated on the first relation not annihilated by the matrices"""
        for label, rel in self.relations.items():
            residual = self.evaluate_matrices(rel, mats)
            if not linalg.is_zero(residual):
                raise RelationViolated(label, residual)
        return True

    def __repr__(self):
        return 'PresentedAlgebra(%s, %s, %d relations)' % (self.name, self.generators, len(self.relations))


class GeneratorEmbedding:
    """ Generator label -> element of a FinDimHopf """
    def __init__(self, target, presentation, assignment):
        self.target = target
        self.presentation = presentation
        self.assignment = dict(assignment)

    def image(self, p):
        H = self.target

        def add(acc, value, coef):
            acc = {} if acc is None else acc
            return axpy(acc, value, coef)
        out = evaluate(p, self.assignment, H.mul, H.one(), add)
        return out or {}

    def verify(self):
        report = AxiomReport('%s in %s' % (self.presentation.name, self.target.name), 'relations')
        for label, rel in self.presentation.relations.items():
            residual = self.image(rel)
            report.add(label, not residual, None if not residual else (label,),
                       self.target.format_element(residual) if residual else None)
        return report

    def require(self):
        for label, rel in self.presentation.relations.items():
            residual = self.image(rel)
            if residual:
                raise PresentationMismatch(label, self.target.format_element(residual))
        return True

    def pbw_rank(self):
        echelon = SparseEchelon(self.target.dim)
        for w in self.presentation.pbw_monomials:
            echelon.add(self.image({w: ONE}))
        return echelon.rank


A1_PRESENTATION = PresentedAlgebra('A1', ['g', 'x'], [
    ('g^6 = 1', poly((1, 'g^6'), (-1, ''))),
    ('x^2 = 1 - g^2', poly((1, 'x^2'), (-1, ''), (1, 'g^2'))),
    ('gx = -xg', poly((1, 'g x'), (1, 'x g'))),
])


def simple_reps_A1():
    """The 1-dim characters epsilon, chi and the 2-dim simple representations rho1, rho2 of A1"""
    xi = XI
    xi_inv = XI.inverse()
    reps = OrderedDict([
        ('epsilon', {'g': linalg.matrix([[1]]), 'x': linalg.matrix([[0]])}),
        ('chi', {'g': linalg.matrix([[-1]]), 'x': linalg.matrix([[0]])}),
        ('rho1', {'g': linalg.diag([xi, -xi]),
                  'x': linalg.matrix([[0, 1 - xi], [1 + xi, 0]])}),
        ('rho2', {'g': linalg.diag([-xi_inv, xi_inv]),
                  'x': linalg.matrix([[0, 1 - xi_inv], [1 + xi_inv, 0]])}),
    ])
    for mats in reps.values():
        A1_PRESENTATION.check_matrices(mats)
    return reps


def rep_on_basis(mats):
    """Matrices of g^i and g^i x for a representation of a pointed algebra"""
    g, x = mats['g'], mats['x']
    powers = [linalg.identity(g.shape[0])]
    for _ in range(5):
        powers.append(linalg.matmul(powers[-1], g))
    return powers + [linalg.matmul(p, x) for p in powers]


def matrix_coefficient(basis_mats, i, j):
    """E_ij o rho as an element of the dual algebra (coordinates on the dual basis)"""
    return {m: M[i, j] for m, M in enumerate(basis_mats) if M[i, j]}


def verify_comatrix_relations(theta_sign='plus'):
    """Evaluate the listed identities between the matrix coefficients of rho1, rho2 in A1*"""
    lam = named_constants(theta_sign).lam
    A1 = build_pointed('A1')
    Ad = dual_hopf(A1)
    reps = simple_reps_A1()
    r1 = rep_on_basis(reps['rho1'])
    r2 = rep_on_basis(reps['rho2'])
    C = {(i + 1, j + 1): matrix_coefficient(r1, i, j) for i in range(2) for j in range(2)}
    D = {(i + 1, j + 1): matrix_coefficient(r2, i, j) for i in range(2) for j in range(2)}
    chi = matrix_coefficient(rep_on_basis(reps['chi']), 0, 0)
    eps = Ad.one()
    mul, S = Ad.mul, Ad.S

    def times(s, v):
        return {k: c * s for k, c in v.items()}

    def neg(v):
        return times(-ONE, v)

    def pw(v, k):
        return Ad.power(v, k)

    def comatrix(i, j):
        out = {}
        for k in (1, 2):
            axpy(out, Ad.tensor(C[(i, k)], C[(k, j)]))
        return out

    identities = [
        ('S(C12) = D12', lambda: S(C[1, 2]), lambda: D[1, 2]),
        ('S(C21) = D21', lambda: S(C[2, 1]), lambda: D[2, 1]),
        ('S(C11) = D22', lambda: S(C[1, 1]), lambda: D[2, 2]),
        ('S(C22) = D11', lambda: S(C[2, 2]), lambda: D[1, 1]),
        ('S(D12) = -C12', lambda: S(D[1, 2]), lambda: neg(C[1, 2])),
        ('S(D21) = -C21', lambda: S(D[2, 1]), lambda: neg(C[2, 1])),
        ('S(D11) = C22', lambda: S(D[1, 1]), lambda: C[2, 2]),
        ('S(D22) = C11', lambda: S(D[2, 2]), lambda: C[1, 1]),
        ('C11^3 = chi', lambda: pw(C[1, 1], 3), lambda: chi),
        ('C22^3 = epsilon', lambda: pw(C[2, 2], 3), lambda: eps),
        ('C11 C22 = C22 C11', lambda: mul(C[1, 1], C[2, 2]), lambda: mul(C[2, 2], C[1, 1])),
        ('C11^2 C22 = epsilon', lambda: mul(pw(C[1, 1], 2), C[2, 2]), lambda: eps),
        ('C11^3 C22 = epsilon', lambda: mul(pw(C[1, 1], 3), C[2, 2]), lambda: eps),
        ('C22 C11^3 = epsilon', lambda: mul(C[2, 2], pw(C[1, 1], 3)), lambda: eps),
        ('C12^2 = 0', lambda: pw(C[1, 2], 2), lambda: {}),
        ('C21^2 = 0', lambda: pw(C[2, 1], 2), lambda: {}),
        ('C12 C21 = 0', lambda: mul(C[1, 2], C[2, 1]), lambda: {}),
        ('C21 C12 = 0', lambda: mul(C[2, 1], C[1, 2]), lambda: {}),
        ('C11 C12 = xi C12 C11', lambda: mul(C[1, 1], C[1, 2]), lambda: times(XI, mul(C[1, 2], C[1, 1]))),
        ('C11 C21 = xi C21 C11', lambda: mul(C[1, 1], C[2, 1]), lambda: times(XI, mul(C[2, 1], C[1, 1]))),
        ('C11 C12 = Lambda C22 C21', lambda: mul(C[1, 1], C[1, 2]), lambda: times(lam, mul(C[2, 2], C[2, 1]))),
        ('C11 C21 = Lambda^-1 C22 C12', lambda: mul(C[1, 1], C[2, 1]),
         lambda: times(lam.inverse(), mul(C[2, 2], C[1, 2]))),
        ('S(C11) = C11^5', lambda: S(C[1, 1]), lambda: pw(C[1, 1], 5)),
        ('S(C12) = Lambda xi C22 C21', lambda: S(C[1, 2]), lambda: times(lam * XI, mul(C[2, 2], C[2, 1]))),
        ('S(C21) = Lambda^-1 xi^-2 C22 C12', lambda: S(C[2, 1]),
         lambda: times(lam.inverse() * xi_power(-2), mul(C[2, 2], C[1, 2]))),
        ('S(C22) = C11^2', lambda: S(C[2, 2]), lambda: pw(C[1, 1], 2)),
    ]
    report = AxiomReport('comatrix relations', 'evaluation')
    for name, lhs, rhs in identities:
        diff = axpy(dict(lhs()), rhs(), -ONE)
        report.add(name, not diff, None if not diff else (name,), Ad.format_element(diff) if diff else None)
    for i in (1, 2):
        for j in (1, 2):
            name = 'Delta(C%d%d) comatrix law' % (i, j)
            diff = axpy(dict(Ad.comul(C[i, j])), comatrix(i, j), -ONE)
            report.add(name, not diff, None if not diff else (name,), Ad.format_tensor(diff) if diff else None)
            expected = ONE if i == j else ZERO
            report.add('epsilon(C%d%d) = %s' % (i, j, expected), Ad.eps(C[i, j]) == expected)
    failed = [e.axiom for e in report.failed()]
    if failed:
        log.warning('Comatrix identities not satisfied: %s' % ', '.join(failed))
    return report


def phi_matrix(theta_sign='plus'):
    """phi(g^i) = sum_k xi^(-ik) (a^k)*, phi(g^i x) = theta sum_k xi^(-(k+1)i) (ba^k)*"""
    theta = named_constants(theta_sign).theta
    m = linalg.zeros(12, 12)
    for i in range(6):
        for k in range(6):
            m[k, i] = xi_power(-i * k)
            m[6 + k, 6 + i] = theta * xi_power(-(k + 1) * i)
    return m


def phi_iso(theta_sign='plus', A1=None, C=None):
    """Certified Hopf isomorphism A1 -> C*"""
    A1 = A1 or build_pointed('A1')
    Cd = dual_hopf(C or build_C(theta_sign))
    phi = HopfMorphism(A1, Cd, phi_matrix(theta_sign), name='phi')
    phi.report = phi.require()
    return phi


def d_presentation(theta_sign='plus'):
    const = named_constants(theta_sign)
    theta, lam_inv = const.theta, const.lam.inverse()
    xi_m2 = xi_power(-2)
    ax_rhs = pscale(poly((1, 'b a^3'), (-1, 'g b')), lam_inv * theta * xi_m2)
    bx_rhs = pscale(poly((1, 'a^4'), (-1, 'g a')), theta * xi_m2)
    relations = [
        ('a^6 = 1', poly((1, 'a^6'), (-1, ''))),
        ('b^2 = 0', poly((1, 'b^2'))),
        ('ba = xi ab', poly((1, 'b a'), (-XI, 'a b'))),
        ('g^6 = 1', poly((1, 'g^6'), (-1, ''))),
        ('x^2 = 1 - g^2', poly((1, 'x^2'), (-1, ''), (1, 'g^2'))),
        ('gx = -xg', poly((1, 'g x'), (1, 'x g'))),
        ('ag = ga', poly((1, 'a g'), (-1, 'g a'))),
        ('bg = -gb', poly((1, 'b g'), (1, 'g b'))),
        ('ax + xi^-2 xa = Lambda^-1 theta xi^-2 (ba^3 - gb)',
         padd(poly((1, 'a x'), (xi_m2, 'x a')), ax_rhs, -ONE)),
        ('bx + xi^-2 xb = theta xi^-2 (a^4 - ga)',
         padd(poly((1, 'b x'), (xi_m2, 'x b')), bx_rhs, -ONE)),
    ]
    pbw = []
    for k in range(6):
        for d in range(2):
            for i in range(6):
                for e in range(2):
                    pbw.append(('g',) * k + ('x',) * d + ('a',) * i + ('b',) * e)
    return PresentedAlgebra('D', ['a', 'b', 'g', 'x'], relations, pbw)


def build_D(theta_sign='plus', C=None, full_check_max_dim=48):
    """D = D(C^cop) with the presentation on a, b, g, x; returns (D, presentation, embedding)"""
    const = named_constants(theta_sign)
    C = C or build_C(theta_sign)
    Ccop = variant(C, 'cop')
    D = drinfeld_double(Ccop, name='D')
    assignment = OrderedDict([
        ('a', embed_right(Ccop, {1: ONE})),
        ('b', embed_right(Ccop, {6: ONE})),
        ('g', embed_left(Ccop, {k: xi_power(-k) for k in range(6)})),
        ('x', embed_left(Ccop, {6 + k: const.theta for k in range(6)})),
    ])
    D.generators = dict(assignment)
    presentation = d_presentation(theta_sign)
    embedding = GeneratorEmbedding(D, presentation, assignment)
    embedding.require()
    # (a^3 - g)a and a^4 - ga give the same right hand side
    lhs = embedding.image(pmul_word(poly((1, 'a^3'), (-1, 'g')), 'a'))
    rhs = embedding.image(poly((1, 'a^4'), (-1, 'g a')))
    if axpy(dict(lhs), rhs, -ONE):
        raise PresentationMismatch('(a^3 - g)a = a^4 - ga')
    rank = embedding.pbw_rank()
    if rank != D.dim:
        raise PresentationMismatch('PBW monomials span', 'rank %d of %d' % (rank, D.dim))
    _require(D, full_check_max_dim)
    log.info('Built D with %d PBW monomials of rank %d' % (len(presentation.pbw_monomials), rank))
    return D, presentation, embedding


def pmul_word(p, w):
    return {u + word(w): c for u, c in p.items()}


def dual_table_diff(tables, theta_sign='plus', C=None):
    """Rows of the printed dual-basis coproduct table that differ from the transposed multiplication"""
    C = C or build_C(theta_sign)
    Cd = dual_hopf(C)
    rows = []
    for label, terms in tables['dual_coproducts'].items():
        printed = {}
        for coef, left, right in terms:
            key = (C.index(str(left)), C.index(str(right)))
            printed[key] = printed.get(key, ZERO) + as_scalar(str(coef))
        printed = {k: v for k, v in printed.items() if v}
        computed = Cd.comult.get(C.index(str(label)), {})
        if printed != computed:
            missing = {k: v for k, v in computed.items() if printed.get(k) != v}
            extra = {k: v for k, v in printed.items() if computed.get(k) != v}
            rows.append({
                'row': str(label) + '*',
                'printed_only': Cd.format_tensor(extra),
                'computed_only': Cd.format_tensor(missing),
            })
    return rows


def build(name, theta_sign='plus', full_check_max_dim=48):
    """Catalog lookup by name"""
    if name in POINTED_PARAMS:
        return build_pointed(name)
    if name == 'C':
        return build_C(theta_sign)
    if name == 'Cdual':
        return dual_hopf(build_C(theta_sign))
    if name == 'D':
        return build_D(theta_sign, full_check_max_dim=full_check_max_dim)[0]
    if name == 'Z2':
        return group_algebra(2, name='Z2')
    if name == 'K':
        return trivial_hopf()
    raise UnknownName('Unknown catalog algebra %s (expected one of %s)' % (name, ', '.join(CATALOG_NAMES)))
