"""
Structure-constant representation of finite-dimensional Hopf algebras over Q(xi).

Storage conventions (all sparse, zero coefficients never stored):
  mult      {(i, j): {k: s}}        e_i e_j = sum_k s e_k
  unit      {k: s}                  1 = sum_k s e_k
  comult    {i: {(j, k): s}}        Delta(e_i) = sum s e_j (x) e_k
  counit    [s_0, ..., s_{n-1}]     epsilon(e_i)
  antipode  {j: {i: s}}             S(e_j) = sum_i s e_i
"""
from collections import namedtuple
import logging as log

import numpy as np

from .errors import (DimensionMismatch, MalformedTensor, NotAMorphism, NotCertified, NotClosed,
                     NotGrouplike, SingularAntipode, SingularMatrix)
from .scalars import ONE, ZERO, as_scalar, roots_in_field
from .util import linalg
from .util.linalg import SparseEchelon, axpy

LEVELS = ('algebra', 'coalgebra', 'bialgebra', 'hopf')

AxiomEntry = namedtuple('AxiomEntry', 'axiom passed witness discrepancy')


class AxiomReport:
    """ Pass/fail per axiom or identity; failed entries carry a witness and the nonzero discrepancy """
    def __init__(self, subject, strategy=None):
        self.subject = subject
        self.strategy = strategy
        self.entries = []
        self.notes = []

    def add(self, axiom, passed, witness=None, discrepancy=None):
        self.entries.append(AxiomEntry(axiom, bool(passed), witness, discrepancy))
        if not passed:
            log.debug('%s: %s fails at %s', self.subject, axiom, witness)
        return passed

    def note(self, text):
        self.notes.append(text)

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    def failed(self):
        return [e for e in self.entries if not e.passed]

    def entry(self, axiom):
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def merge(self, other, prefix=''):
        for e in other.entries:
            self.entries.append(e._replace(axiom=prefix + e.axiom))
        self.notes.extend(other.notes)
        return self

    def to_json(self):
        return {
            'subject': self.subject,
            'strategy': self.strategy,
            'passed': self.passed,
            'entries': [{'axiom': e.axiom, 'passed': e.passed,
                         'witness': _jsonable(e.witness), 'discrepancy': _jsonable(e.discrepancy)}
                        for e in self.entries],
            'notes': list(self.notes),
        }

    def __repr__(self):
        return 'AxiomReport(%s, %d entries, passed=%s)' % (self.subject, len(self.entries), self.passed)


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


def _coef_str(s):
    lit = s.to_literal()
    return lit if (s.is_rational() or not s.r0) and '+' not in lit[1:] else '(' + lit + ')'


class FinDimHopf:
    """ Finite-dimensional (co/bi/Hopf) algebra given by structure constants """
    def __init__(self, name, basis, mult, unit, comult, counit, antipode=None, generators=None):
        self.name = name
        self.basis = list(basis)
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = list(counit)
        self.antipode = antipode
        self.generators = dict(generators or {})
        self.certified = set()
        self._sinv = None
        self.validate()

    @property
    def dim(self):
        return len(self.basis)

    def validate(self):
        n = self.dim
        if len(self.counit) != n:
            raise MalformedTensor('counit has length %d, expected %d' % (len(self.counit), n))

        def check(idx, where):
            if not 0 <= idx < n:
                raise MalformedTensor('%s index %d out of range for dim %d' % (where, idx, n), index=idx)
        for (i, j), row in self.mult.items():
            check(i, 'mult')
            check(j, 'mult')
            for k in row:
                check(k, 'mult')
        for k in self.unit:
            check(k, 'unit')
        for i, row in self.comult.items():
            check(i, 'comult')
            for (j, k) in row:
                check(j, 'comult')
                check(k, 'comult')
        if self.antipode is not None:
            for j, row in self.antipode.items():
                check(j, 'antipode')
                for i in row:
                    check(i, 'antipode')

    def index(self, label):
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError('%s has no basis element %r' % (self.name, label))

    def e(self, label_or_index):
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        return {i: ONE}

    def one(self):
        return dict(self.unit)

    # Sparse element operations

    def mul(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.mult.get((i, j))
                if prod:
                    axpy(out, prod, a * b)
        return out

    def power(self, x, k):
        acc = self.one()
        for _ in range(k):
            acc = self.mul(acc, x)
        return acc

    def comul(self, x):
        out = {}
        for i, a in x.items():
            row = self.comult.get(i)
            if row:
                axpy(out, row, a)
        return out

    def eps(self, x):
        acc = ZERO
        for i, a in x.items():
            c = self.counit[i]
            if c:
                acc = acc + a * c
        return acc

    def S(self, x):
        out = {}
        for j, a in x.items():
            row = self.antipode.get(j)
            if row:
                axpy(out, row, a)
        return out

    def tensor_mul(self, X, Y):
        """Product in H (x) H of sparse tensors {(i, j): s}"""
        out = {}
        for (a, b), s in X.items():
            for (c, d), t in Y.items():
                left = self.mult.get((a, c))
                if not left:
                    continue
                right = self.mult.get((b, d))
                if not right:
                    continue
                st = s * t
                for k, u in left.items():
                    su = st * u
                    for l, v in right.items():
                        key = (k, l)
                        val = out.get(key, ZERO) + su * v
                        if val:
                            out[key] = val
                        else:
                            out.pop(key, None)
        return out

    def tensor(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                out[(i, j)] = a * b
        return {k: v for k, v in out.items() if v}

    def delta2(self, x):
        """(Delta (x) id) Delta(x) as {(i, j, k): s}"""
        out = {}
        for (u, w), s in self.comul(x).items():
            for (u1, u2), t in self.comult.get(u, {}).items():
                key = (u1, u2, w)
                val = out.get(key, ZERO) + s * t
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return out

    # Dense interface

    def _sparse(self, v):
        if isinstance(v, dict):
            return v
        v = list(v)
        if len(v) != self.dim:
            raise DimensionMismatch('%s expects vectors of length %d' % (self.name, self.dim),
                                    expected=self.dim, actual=len(v))
        return {i: as_scalar(x) for i, x in enumerate(v) if x}

    def product(self, x, y):
        return linalg.to_dense(self.mul(self._sparse(x), self._sparse(y)), self.dim)

    def coproduct(self, x):
        n = self.dim
        out = linalg.zeros(n, n)
        for (j, k), s in self.comul(self._sparse(x)).items():
            out[j, k] = s
        return out

    def apply_antipode(self, x):
        return linalg.to_dense(self.S(self._sparse(x)), self.dim)

    def counit_of(self, x):
        return self.eps(self._sparse(x))

    # Matrices

    def antipode_matrix(self):
        n = self.dim
        m = linalg.zeros(n, n)
        for j, row in self.antipode.items():
            for i, s in row.items():
                m[i, j] = s
        return m

    def antipode_inverse(self):
        if self._sinv is None:
            try:
                inv = linalg.inverse(self.antipode_matrix())
            except SingularMatrix:
                raise SingularAntipode('Antipode of %s is not invertible' % self.name)
            n = self.dim
            self._sinv = {j: {i: inv[i, j] for i in range(n) if inv[i, j]} for j in range(n)}
        return self._sinv

    # Formatting

    def format_element(self, x):
        if not x:
            return '0'
        terms = []
        for i in sorted(x):
            s = x[i]
            terms.append(self.basis[i] if s == 1 else '%s*%s' % (_coef_str(s), self.basis[i]))
        return ' + '.join(terms)

    def format_tensor(self, X):
        if not X:
            return '0'
        terms = []
        for key in sorted(X):
            s = X[key]
            labels = '⊗'.join(self.basis[i] for i in key)
            terms.append(labels if s == 1 else '%s*%s' % (_coef_str(s), labels))
        return ' + '.join(terms)

    def __repr__(self):
        return 'FinDimHopf(%s, dim=%d, certified=%s)' % (self.name, self.dim, sorted(self.certified))


def _sub(x, y):
    out = dict(x)
    return axpy(out, y, -ONE)


# Verification

def _check_associativity(H, report, left_factors):
    n = H.dim
    for label, s in left_factors:
        for j in range(n):
            sj = H.mul(s, {j: ONE})
            for k in range(n):
                lhs = H.mul(sj, {k: ONE})
                rhs = H.mul(s, H.mult.get((j, k), {}))
                if lhs != rhs:
                    return report.add('associativity', False, (label, H.basis[j], H.basis[k]),
                                      H.format_element(_sub(lhs, rhs)))
    return report.add('associativity', True)


def _check_unit(H, report):
    one = H.one()
    for i in range(H.dim):
        ei = {i: ONE}
        for side, val in (('left', H.mul(one, ei)), ('right', H.mul(ei, one))):
            if val != ei:
                return report.add('unit', False, (side, H.basis[i]), H.format_element(_sub(val, ei)))
    return report.add('unit', True)


def _check_coassociativity(H, report):
    for i in range(H.dim):
        lhs = H.delta2({i: ONE})
        rhs = {}
        for (u, w), s in H.comult.get(i, {}).items():
            for (w1, w2), t in H.comult.get(w, {}).items():
                key = (u, w1, w2)
                val = rhs.get(key, ZERO) + s * t
                if val:
                    rhs[key] = val
                else:
                    rhs.pop(key, None)
        if lhs != rhs:
            diff = axpy(dict(lhs), rhs, -ONE)
            return report.add('coassociativity', False, (H.basis[i],), H.format_tensor(diff))
    return report.add('coassociativity', True)


def _check_counit(H, report):
    for i in range(H.dim):
        left = {}
        right = {}
        for (j, k), s in H.comult.get(i, {}).items():
            if H.counit[j]:
                axpy(left, {k: s * H.counit[j]})
            if H.counit[k]:
                axpy(right, {j: s * H.counit[k]})
        ei = {i: ONE}
        for side, val in (('left', left), ('right', right)):
            if val != ei:
                return report.add('counit', False, (side, H.basis[i]), H.format_element(_sub(val, ei)))
    return report.add('counit', True)


def _check_comult_unit(H, report):
    one = H.one()
    d1 = H.comul(one)
    expected = H.tensor(one, one)
    if d1 != expected:
        return report.add('comult_unit', False, ('1',), H.format_tensor(axpy(dict(d1), expected, -ONE)))
    if H.eps(one) != ONE:
        return report.add('comult_unit', False, ('epsilon(1)',), str(H.eps(one) - 1))
    return report.add('comult_unit', True)


def _check_multiplicativity(H, report, left_factors):
    n = H.dim
    for label, s in left_factors:
        ds = H.comul(s)
        es = H.eps(s)
        for j in range(n):
            prod = H.mul(s, {j: ONE})
            lhs = H.comul(prod)
            rhs = H.tensor_mul(ds, H.comult.get(j, {}))
            if lhs != rhs:
                return report.add('multiplicativity', False, (label, H.basis[j]),
                                  H.format_tensor(axpy(dict(lhs), rhs, -ONE)))
            if H.eps(prod) != es * H.counit[j]:
                return report.add('multiplicativity', False, ('epsilon', label, H.basis[j]),
                                  str(H.eps(prod) - es * H.counit[j]))
    return report.add('multiplicativity', True)


def _check_antipode(H, report):
    if H.antipode is None:
        return report.add('antipode', False, ('missing',))
    one = H.one()
    for i in range(H.dim):
        left = {}
        right = {}
        for (j, k), s in H.comult.get(i, {}).items():
            axpy(left, H.mul(H.S({j: ONE}), {k: ONE}), s)
            axpy(right, H.mul({j: ONE}, H.S({k: ONE})), s)
        expected = {k: v * H.counit[i] for k, v in one.items() if H.counit[i]}
        for side, val in (('antipode_left', left), ('antipode_right', right)):
            if val != expected:
                return report.add(side, False, (H.basis[i],), H.format_element(_sub(val, expected)))
    report.add('antipode_left', True)
    return report.add('antipode_right', True)


def _check_antimultiplicative(H, report, left_factors):
    for label, s in left_factors:
        Ss = H.S(s)
        for j in range(H.dim):
            lhs = H.S(H.mul(s, {j: ONE}))
            rhs = H.mul(H.S({j: ONE}), Ss)
            if lhs != rhs:
                return report.add('antipode_antimultiplicative', False, (label, H.basis[j]),
                                  H.format_element(_sub(lhs, rhs)))
    return report.add('antipode_antimultiplicative', True)


def generator_closure(H, generators):
    """Echelon form of the span of left-nested products s_1(s_2(...(s_k 1)))"""
    echelon = SparseEchelon(H.dim)
    one = H.one()
    echelon.add(one)
    frontier = [one]
    while frontier:
        new = []
        for w in frontier:
            for s in generators:
                v = H.mul(s, w)
                if echelon.add(v):
                    new.append(v)
        frontier = new
    return echelon


def select_generators(H, candidates):
    """Greedy subset of (label, element) candidates generating H as an algebra"""
    chosen = []
    span = generator_closure(H, [])
    for label, v in candidates:
        if span.rank == H.dim:
            break
        if span.contains(v):
            continue
        chosen.append((label, v))
        span = generator_closure(H, [s for _, s in chosen])
    return dict(chosen)


def verify_hopf(H, level='hopf', full_check_max_dim=48):
    """Check the axioms of H up to `level`; certified levels are recorded on H"""
    if level not in LEVELS:
        raise ValueError('Unknown level %s' % level)
    H.validate()
    n = H.dim
    use_generators = n > full_check_max_dim and bool(H.generators)
    if n > full_check_max_dim and not H.generators:
        log.warning('%s has dim %d but no generators; running full checks' % (H.name, n))
    if use_generators:
        left_factors = sorted(H.generators.items())
        strategy = 'generators'
    else:
        left_factors = [(H.basis[i], {i: ONE}) for i in range(n)]
        strategy = 'full'
    report = AxiomReport(H.name, strategy)
    upto = LEVELS.index(level)
    if use_generators:
        span = generator_closure(H, [s for _, s in left_factors])
        report.add('generators_span', span.rank == n, ('rank', span.rank, n) if span.rank != n else None)
    _check_associativity(H, report, left_factors)
    _check_unit(H, report)
    if upto >= 1:
        _check_coassociativity(H, report)
        _check_counit(H, report)
    if upto >= 2:
        _check_comult_unit(H, report)
        _check_multiplicativity(H, report, left_factors)
    if upto >= 3:
        _check_antipode(H, report)
        if H.antipode is not None:
            _check_antimultiplicative(H, report, left_factors)
    if report.passed:
        H.certified.update(LEVELS[:upto + 1])
    log.info('Verified %s at level %s (%s): %s' % (H.name, level, strategy,
                                                   'pass' if report.passed else 'FAIL'))
    return report


def require_certified(H, level='hopf'):
    if level not in H.certified:
        raise NotCertified(H.name, level)


# Constructions

def dual_hopf(H):
    """Dual Hopf algebra on the dual basis; certified when H is"""
    require_certified(H, 'hopf')
    n = H.dim
    mult = {}
    for k, row in H.comult.items():
        for (i, j), s in row.items():
            mult.setdefault((i, j), {})[k] = s
    comult = {}
    for (i, j), row in H.mult.items():
        for k, s in row.items():
            comult.setdefault(k, {})[(i, j)] = s
    unit = {i: c for i, c in enumerate(H.counit) if c}
    counit = [H.unit.get(i, ZERO) for i in range(n)]
    antipode = {}
    for i, row in H.antipode.items():
        for j, s in row.items():
            antipode.setdefault(j, {})[i] = s
    D = FinDimHopf(H.name + '*', [label + '*' for label in H.basis], mult, unit, comult, counit, antipode)
    D.certified = set(LEVELS)
    return D


def variant(H, which):
    """H^op, H^cop or H^bop; the antipode is inverted for op and cop"""
    if which not in ('op', 'cop', 'bop'):
        raise ValueError('Unknown variant %s' % which)
    require_certified(H, 'hopf')
    if which in ('op', 'bop'):
        mult = {(j, i): dict(row) for (i, j), row in H.mult.items()}
    else:
        mult = {k: dict(row) for k, row in H.mult.items()}
    if which in ('cop', 'bop'):
        comult = {i: {(k, j): s for (j, k), s in row.items()} for i, row in H.comult.items()}
    else:
        comult = {i: dict(row) for i, row in H.comult.items()}
    if which == 'bop':
        antipode = {j: dict(row) for j, row in H.antipode.items()}
    else:
        antipode = {j: dict(row) for j, row in H.antipode_inverse().items()}
    V = FinDimHopf('%s^%s' % (H.name, which), H.basis, mult, dict(H.unit), comult, H.counit, antipode,
                   H.generators)
    V.certified = set(LEVELS)
    return V


def drinfeld_double(H, name=None):
    """D(H) = H^{*cop} (x) H with basis f_p # e_c at index p*n + c.

    (f # a)(g # b) = f <g_(3), a_(1)> g_(2) # a_(2) <g_(1), S^-1(a_(3))> b
    """
    require_certified(H, 'hopf')
    n = H.dim
    sinv = H.antipode_inverse()
    mult_h, comult_h = H.mult, H.comult

    # comm[(c, q)] = (1 # e_c)(f_q # 1) = sum coef f_y # e_c2, stored as {(y, c2): coef}
    comm = {}
    for c in range(n):
        for (c1, c2, c3), s in H.delta2({c: ONE}).items():
            for x, sx in sinv.get(c3, {}).items():
                s_sx = s * sx
                for y in range(n):
                    xy = mult_h.get((x, y))
                    if not xy:
                        continue
                    for m, t in xy.items():
                        xyz = mult_h.get((m, c1))
                        if not xyz:
                            continue
                        for q, u in xyz.items():
                            terms = comm.setdefault((c, q), {})
                            key = (y, c2)
                            val = terms.get(key, ZERO) + s_sx * t * u
                            if val:
                                terms[key] = val
                            else:
                                terms.pop(key, None)

    # f_p f_y in H*
    fprod = {}
    for m, row in comult_h.items():
        for (p, y), s in row.items():
            fprod.setdefault((p, y), {})[m] = s

    mult = {}
    for c in range(n):
        for q in range(n):
            terms = comm.get((c, q))
            if not terms:
                continue
            for p in range(n):
                for d in range(n):
                    out = {}
                    for (y, c2), s in terms.items():
                        fpy = fprod.get((p, y))
                        if not fpy:
                            continue
                        ecd = mult_h.get((c2, d))
                        if not ecd:
                            continue
                        for m, t in fpy.items():
                            st = s * t
                            for k, u in ecd.items():
                                idx = m * n + k
                                val = out.get(idx, ZERO) + st * u
                                if val:
                                    out[idx] = val
                                else:
                                    out.pop(idx, None)
                    if out:
                        mult[(p * n + c, q * n + d)] = out

    mult_to = {}
    for (x, y), row in mult_h.items():
        for q, s in row.items():
            mult_to.setdefault(q, []).append((x, y, s))
    comult = {}
    for q in range(n):
        for c in range(n):
            row = {}
            for x, y, s in mult_to.get(q, []):
                for (c1, c2), t in comult_h.get(c, {}).items():
                    key = (y * n + c1, x * n + c2)
                    val = row.get(key, ZERO) + s * t
                    if val:
                        row[key] = val
                    else:
                        row.pop(key, None)
            if row:
                comult[q * n + c] = row

    unit = {}
    for p in range(n):
        if H.counit[p]:
            for c, s in H.unit.items():
                unit[p * n + c] = H.counit[p] * s
    counit = [H.unit.get(p, ZERO) * H.counit[c] for p in range(n) for c in range(n)]

    antipode = {}
    for p in range(n):
        g = {m: row[p] for m, row in sinv.items() if row.get(p)}
        for c in range(n):
            image = {}
            for k, sk in H.antipode.get(c, {}).items():
                for q, gq in g.items():
                    for (y, c2), coef in comm.get((k, q), {}).items():
                        axpy(image, {y * n + c2: coef}, sk * gq)
            if image:
                antipode[p * n + c] = image

    basis = ['%s*|%s' % (f, e) for f in H.basis for e in H.basis]
    D = FinDimHopf(name or 'D(%s)' % H.name, basis, mult, unit, comult, counit, antipode)
    candidates = []
    for label, v in sorted(H.generators.items()):
        candidates.append((label, embed_right(H, v)))
    candidates += [(H.basis[c], embed_right(H, {c: ONE})) for c in range(n)]
    candidates += [(H.basis[p] + '*', embed_left(H, {p: ONE})) for p in range(n)]
    D.generators = select_generators(D, candidates)
    log.info('Built Drinfeld double %s of dim %d' % (D.name, D.dim))
    return D


def embed_right(H, v):
    """Image of v in H under H -> D(H), h -> epsilon # h"""
    n = H.dim
    out = {}
    for p in range(n):
        if H.counit[p]:
            for c, s in v.items():
                out[p * n + c] = H.counit[p] * s
    return out


def embed_left(H, f):
    """Image of f in H* under H^{*cop} -> D(H), f -> f # 1"""
    n = H.dim
    out = {}
    for p, s in f.items():
        for c, u in H.unit.items():
            out[p * n + c] = s * u
    return out


def subhopf(H, indices, name=None):
    """Restriction of H to the span of the given basis elements (must be closed)"""
    indices = list(indices)
    pos = {i: k for k, i in enumerate(indices)}

    def restrict(x, what):
        if any(i not in pos for i in x):
            raise NotClosed('%s leaves the span of %s' % (what, [H.basis[i] for i in indices]))
        return {pos[i]: s for i, s in x.items()}
    mult = {}
    for i in indices:
        for j in indices:
            prod = H.mult.get((i, j))
            if prod:
                mult[(pos[i], pos[j])] = restrict(prod, 'product %s*%s' % (H.basis[i], H.basis[j]))
    comult = {}
    for i in indices:
        row = {}
        for (j, k), s in H.comult.get(i, {}).items():
            if j not in pos or k not in pos:
                raise NotClosed('coproduct of %s leaves the span' % H.basis[i])
            row[(pos[j], pos[k])] = s
        comult[pos[i]] = row
    antipode = {pos[j]: restrict(H.antipode.get(j, {}), 'antipode of %s' % H.basis[j]) for j in indices}
    unit = restrict(H.unit, 'unit')
    counit = [H.counit[i] for i in indices]
    return FinDimHopf(name or 'sub(%s)' % H.name, [H.basis[i] for i in indices], mult, unit, comult,
                      counit, antipode)


def antipode_order(H, bound=48):
    """Least k >= 1 with S^k = id, or None if none up to bound"""
    images = {i: {i: ONE} for i in range(H.dim)}
    for k in range(1, bound + 1):
        images = {i: H.S(v) for i, v in images.items()}
        if all(v == {i: ONE} for i, v in images.items()):
            return k
    return None


def trace_of_square(H):
    acc = ZERO
    for i in range(H.dim):
        acc = acc + H.S(H.S({i: ONE})).get(i, ZERO)
    return acc


def is_grouplike(H, v):
    v = H._sparse(v)
    return bool(v) and H.comul(v) == H.tensor(v, v) and H.eps(v) == ONE


def skew_primitives(H, g, h):
    """Basis of {v : Delta(v) = v (x) g + h (x) v}"""
    g = H._sparse(g)
    h = H._sparse(h)
    for label, w in (('g', g), ('h', h)):
        if not is_grouplike(H, w):
            raise NotGrouplike('%s = %s is not group-like' % (label, H.format_element(w)), w)
    rows = {}
    for i in range(H.dim):
        col = dict(H.comult.get(i, {}))
        axpy(col, H.tensor({i: ONE}, g), -ONE)
        axpy(col, H.tensor(h, {i: ONE}), -ONE)
        for key, s in col.items():
            rows.setdefault(key, {})[i] = s
    echelon = SparseEchelon(H.dim)
    for key in sorted(rows):
        echelon.add(rows[key])
    return echelon.nullspace()


def coradical(H):
    """Basis of the coradical: the annihilator of rad(H*), rad via the trace form (char 0)"""
    n = H.dim
    t = [ZERO] * n
    for k, row in H.comult.items():
        for (m, kk), s in row.items():
            if kk == k:
                t[m] = t[m] + s
    form = linalg.zeros(n, n)
    for l, row in H.comult.items():
        if not t[l]:
            continue
        for (i, j), s in row.items():
            form[i, j] = form[i, j] + s * t[l]
    radical = linalg.nullspace(form)
    if not radical:
        return [{i: ONE} for i in range(n)]
    rad = linalg.zeros(len(radical), n)
    for r, v in enumerate(radical):
        rad[r, :] = v
    return [linalg.to_sparse(v) for v in linalg.nullspace(rad)]


def is_subalgebra(H, basis):
    """(closed, witness pair) for the span of the given sparse vectors"""
    echelon = SparseEchelon(H.dim)
    for v in basis:
        echelon.add(v)
    for a, x in enumerate(basis):
        for b, y in enumerate(basis):
            if not echelon.contains(H.mul(x, y)):
                return False, (a, b)
    return True, None


def _left_inverse(vectors, n):
    """Rows selecting coordinates: returns (pivot rows, inverse) so coords = inv . v[pivots]"""
    m = linalg.zeros(n, len(vectors))
    for c, v in enumerate(vectors):
        for i, s in v.items():
            m[i, c] = s
    _, pivots = linalg.rref(linalg.transpose(m))
    inv = linalg.inverse(m[pivots, :])
    return pivots, inv


def grouplikes(H):
    """All group-like elements of H, as dense coordinate vectors.

    Group-likes span 1-dim subcoalgebras of the coradical Q. Writing T_k for the
    operator (id (x) q^k)Delta on Q, the common eigenvectors of all T_k are exactly
    the multiples of group-likes; they are found by branching over the eigenvalues
    in K of each T_k and intersecting eigenspaces.
    """
    n = H.dim
    Q = coradical(H)
    r = len(Q)
    pivots, inv = _left_inverse(Q, n)

    def coords(v):
        col = np.empty(len(pivots), dtype=object)
        for a, p in enumerate(pivots):
            col[a] = v.get(p, ZERO)
        return linalg.matmul(inv, col)

    # comultQ[m][(j, k)]: Delta(q_m) in the basis q_j (x) q_k
    ops = [linalg.zeros(r, r) for _ in range(r)]
    for m, q in enumerate(Q):
        dq = H.comul(q)
        firsts = {}
        for (a, b), s in dq.items():
            firsts.setdefault(b, {})[a] = s
        # coordinates on the right factor, then on the left
        partial = {}
        for b, col in firsts.items():
            partial[b] = coords(col)
        for k in range(r):
            for j in range(r):
                acc = ZERO
                for b, cj in partial.items():
                    if not cj[j]:
                        continue
                    # coefficient of q_k in e_b
                    acc = acc + cj[j] * _coord_of_basis(b, k, pivots, inv)
                if acc:
                    ops[k][j, m] = acc
    results = []
    stack = [(linalg.identity(r), 0)]
    while stack:
        W, k = stack.pop()
        if W.shape[1] == 0:
            continue
        if W.shape[1] == 1 or k == r:
            for c in range(W.shape[1]):
                w = {}
                for m in range(r):
                    if W[m, c]:
                        axpy(w, Q[m], W[m, c])
                e = H.eps(w)
                if not e:
                    continue
                g = {i: s / e for i, s in w.items()}
                if H.comul(g) == H.tensor(g, g):
                    results.append(g)
            continue
        T = ops[k]
        for lam in roots_in_field(linalg.charpoly(T)):
            shifted = T.copy()
            for i in range(r):
                shifted[i, i] = shifted[i, i] - lam
            kernel = linalg.nullspace(linalg.matmul(shifted, W))
            if not kernel:
                continue
            basis = linalg.zeros(W.shape[1], len(kernel))
            for c, v in enumerate(kernel):
                basis[:, c] = v
            stack.append((linalg.matmul(W, basis), k + 1))
    dense = [linalg.to_dense(g, n) for g in results]
    unique = []
    for g in dense:
        if not any(all(a == b for a, b in zip(g, u)) for u in unique):
            unique.append(g)
    unique.sort(key=_vector_key)
    log.debug('%s has %d group-likes', H.name, len(unique))
    return unique


def _coord_of_basis(b, k, pivots, inv):
    """Coefficient of q_k when e_b (restricted to pivot coordinates) is expressed in the Q basis"""
    if b not in pivots:
        return ZERO
    return inv[k, pivots.index(b)]


def _vector_key(v):
    first = next((i for i, x in enumerate(v) if x), len(v))
    return (first, tuple(x.sort_key() for x in v))


class HopfMorphism:
    """ Linear map between Hopf algebras given by its matrix (target.dim x source.dim) """
    def __init__(self, source, target, matrix, name=None):
        if matrix.shape != (target.dim, source.dim):
            raise DimensionMismatch('Morphism matrix has shape %s' % (matrix.shape,),
                                    expected=(target.dim, source.dim), actual=matrix.shape)
        self.source = source
        self.target = target
        self.matrix = matrix
        self.name = name or '%s->%s' % (source.name, target.name)
        self.columns = [linalg.to_sparse(matrix[:, i]) for i in range(source.dim)]

    def apply(self, x):
        out = {}
        for i, s in x.items():
            axpy(out, self.columns[i], s)
        return out

    def apply_tensor(self, X):
        out = {}
        for (i, j), s in X.items():
            for k, a in self.columns[i].items():
                for l, b in self.columns[j].items():
                    key = (k, l)
                    val = out.get(key, ZERO) + s * a * b
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
        return out

    def certify(self):
        """Algebra and coalgebra morphism laws plus bijectivity"""
        A, B = self.source, self.target
        report = AxiomReport(self.name, 'full')
        ok = True
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.apply(A.mult.get((i, j), {}))
                rhs = B.mul(self.columns[i], self.columns[j])
                if lhs != rhs:
                    ok = report.add('multiplicative', False, (A.basis[i], A.basis[j]),
                                    B.format_element(_sub(lhs, rhs)))
                    break
            if not ok:
                break
        if ok:
            report.add('multiplicative', True)
        report.add('unital', self.apply(A.unit) == B.one())
        ok = True
        for i in range(A.dim):
            lhs = self.apply_tensor(A.comult.get(i, {}))
            rhs = B.comul(self.columns[i])
            if lhs != rhs:
                ok = report.add('comultiplicative', False, (A.basis[i],),
                                B.format_tensor(axpy(dict(lhs), rhs, -ONE)))
                break
        if ok:
            report.add('comultiplicative', True)
        report.add('counital', all(B.eps(self.columns[i]) == A.counit[i] for i in range(A.dim)))
        report.add('bijective', A.dim == B.dim and linalg.rank(self.matrix) == A.dim)
        return report

    def require(self):
        report = self.certify()
        if not report.passed:
            e = report.failed()[0]
            raise NotAMorphism(e.axiom, e.discrepancy)
        return report


# JSON interchange

def to_json(H):
    n = H.dim
    return {
        'name': H.name,
        'dim': n,
        'basis': list(H.basis),
        'unit': [H.unit.get(i, ZERO).to_literal() for i in range(n)],
        'counit': [c.to_literal() for c in H.counit],
        'mult': [[i, j, k, s.to_literal()] for (i, j) in sorted(H.mult) for k, s in sorted(H.mult[(i, j)].items())],
        'comult': [[i, j, k, s.to_literal()] for i in sorted(H.comult) for (j, k), s in sorted(H.comult[i].items())],
        'antipode': [[i, j, s.to_literal()] for j in sorted(H.antipode or {}) for i, s in sorted(H.antipode[j].items())],
        'generators': {label: [[i, s.to_literal()] for i, s in sorted(v.items())]
                       for label, v in sorted(H.generators.items())},
        'certified': [level for level in LEVELS if level in H.certified],
    }


def from_json(data):
    n = data['dim']
    if len(data['basis']) != n:
        raise MalformedTensor('basis has %d labels for dim %d' % (len(data['basis']), n))
    mult = {}
    for i, j, k, s in data['mult']:
        s = as_scalar(s)
        if s:
            mult.setdefault((i, j), {})[k] = s
    comult = {}
    for i, j, k, s in data['comult']:
        s = as_scalar(s)
        if s:
            comult.setdefault(i, {})[(j, k)] = s
    antipode = {}
    for i, j, s in data.get('antipode', []):
        s = as_scalar(s)
        if s:
            antipode.setdefault(j, {})[i] = s
    unit = {i: as_scalar(s) for i, s in enumerate(data['unit']) if as_scalar(s)}
    counit = [as_scalar(s) for s in data['counit']]
    generators = {label: {i: as_scalar(s) for i, s in v} for label, v in data.get('generators', {}).items()}
    H = FinDimHopf(data.get('name', 'H'), data['basis'], mult, unit, comult, counit, antipode, generators)
    # stored levels are informational; callers re-run verify_hopf
    H.certified = set()
    return H


def perturbed(H, tensor, index, delta):
    """Copy of H with one structure constant shifted by delta (negative controls)"""
    data = to_json(H)
    data['certified'] = []
    delta = as_scalar(delta)
    key = list(index)
    entries = data[tensor]
    for entry in entries:
        if entry[:-1] == key:
            entry[-1] = (as_scalar(entry[-1]) + delta).to_literal()
            break
    else:
        entries.append(key + [delta.to_literal()])
    G = from_json(data)
    G.name = H.name + '~'
    return G
