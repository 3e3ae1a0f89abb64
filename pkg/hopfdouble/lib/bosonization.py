"""
Radford biproducts R#C of braided Hopf algebras R in the Yetter-Drinfeld category of C.

R is a PresentedBraidedAlgebra on a basis of a YD module V; action, coaction and
braided coproduct are extended from V to the free algebra and pushed to normal
forms, and every relation is checked to be stable. The basis of R#C is
(normal word of R) x (basis of C), index word * dim C + c.
"""
from collections import OrderedDict
from collections.abc import Mapping
import itertools
import logging as log
import re

from ..config.hopf_config import table_coefficient
from .errors import (AxiomFailed, DimensionMismatch, InconsistentExtension, SingularAntipode, UnknownName,
                     UnsupportedDimension)
from .hopfcore import (AxiomReport, FinDimHopf, antipode_order, coradical, dual_hopf, grouplikes,
                       is_subalgebra, require_certified, skew_primitives, trace_of_square, verify_hopf)
from .nichols import PresentedBraidedAlgebra
from .repmod import module_by_name
from .scalars import ONE, ZERO
from .util import linalg
from .util.linalg import SparseEchelon, axpy
from .util.Rewriting import format_word, padd_term, word
from .ydcat import to_yd

BOSONIZATION_NAMES = ('K1', 'K3', 'K5', 'V31', 'V35', 'V22', 'V24')

_POLY_TOKEN = re.compile(r'^\((\w+)\)$')


class BraidedHopfData:
    """ Braided Hopf algebra R in the YD category of C, on the normal-form basis of R """
    def __init__(self, R, V, C=None, check=True):
        self.R = R
        self.V = V
        self.C = C if C is not None else V.C
        if R.generators and (V is None or V.dim != len(R.generators)):
            raise DimensionMismatch('%s has %d generators, the YD module has dim %s'
                                    % (R.name, len(R.generators), None if V is None else V.dim))
        words, complete = R.basis()
        if not complete:
            raise UnsupportedDimension('%s is not finite-dimensional' % R.name)
        self.words = sorted(words, key=R.rewriting.key)
        self.index = {w: k for k, w in enumerate(self.words)}
        self.letter = {g: k for k, g in enumerate(R.generators)}
        self._act = {}
        self._coact = {}
        self._cop = {}
        self._coords = {}
        self._mul = {}
        self._action = {}
        self._coaction = {}
        if check:
            self.check_consistency()

    @property
    def dim(self):
        return len(self.words)

    @property
    def max_degree(self):
        return self.R.max_degree

    def coords(self, p):
        """Normal form of a free polynomial, in the basis of R"""
        out = {}
        for w, s in self.R.reduce(p).items():
            if w not in self.index:
                raise DimensionMismatch('%s reduces to %s outside the basis' % (self.R.name, format_word(w)))
            out[self.index[w]] = s
        return out

    def _word_coords(self, w):
        if w not in self._coords:
            self._coords[w] = self.coords({w: ONE})
        return self._coords[w]

    # Structure on the free algebra

    def act_word(self, h, w):
        """h . w for a basis index h of C and a free word w, as a free polynomial"""
        key = (h, w)
        if key in self._act:
            return self._act[key]
        out = {}
        if not w:
            if self.C.counit[h]:
                out[()] = self.C.counit[h]
        elif self.max_degree is None or len(w) <= self.max_degree:
            g, rest = self.letter[w[0]], w[1:]
            for (h1, h2), s in self.C.comult.get(h, {}).items():
                tail = self.act_word(h2, rest)
                if not tail:
                    continue
                A = self.V.action[h1]
                for k in range(self.V.dim):
                    if not A[k, g]:
                        continue
                    for t, u in tail.items():
                        padd_term(out, (self.R.generators[k],) + t, s * A[k, g] * u)
        self._act[key] = out
        return out

    def act_poly(self, h, p):
        out = {}
        for w, s in p.items():
            for t, u in self.act_word(h, w).items():
                padd_term(out, t, s * u)
        return out

    def coact_word(self, w):
        """delta(w) = w_(-1) (x) w_(0) as {(p, free word): s}"""
        if w in self._coact:
            return self._coact[w]
        out = {}
        if not w:
            for c, u in self.C.unit.items():
                out[(c, ())] = u
        else:
            g, rest = self.letter[w[0]], w[1:]
            tail = self.coact_word(rest)
            for p, F in enumerate(self.V.coaction):
                for k in range(self.V.dim):
                    if not F[k, g]:
                        continue
                    for (q, t), u in tail.items():
                        for m, v in self.C.mult.get((p, q), {}).items():
                            padd_term(out, (m, (self.R.generators[k],) + t), F[k, g] * u * v)
        self._coact[w] = out
        return out

    def coproduct_word(self, w):
        """Braided coproduct of a free word: Delta(g w') = (g (x) 1 + 1 (x) g) Delta(w')"""
        if w in self._cop:
            return self._cop[w]
        out = {}
        if not w:
            out[((), ())] = ONE
        else:
            g = w[0]
            gi = self.letter[g]
            tail = self.coproduct_word(w[1:])
            for (u, v), s in tail.items():
                padd_term(out, ((g,) + u, v), s)
            # (1 (x) g)(u (x) v) = g_(-1).u (x) g_(0) v
            for p, F in enumerate(self.V.coaction):
                for k in range(self.V.dim):
                    if not F[k, gi]:
                        continue
                    for (u, v), s in tail.items():
                        for t, x in self.act_word(p, u).items():
                            padd_term(out, (t, (self.R.generators[k],) + v), F[k, gi] * s * x)
        self._cop[w] = out
        return out

    # Structure on R

    def mul(self, i, j):
        key = (i, j)
        if key not in self._mul:
            self._mul[key] = self._word_coords(self.words[i] + self.words[j])
        return self._mul[key]

    def action(self, h, i):
        key = (h, i)
        if key not in self._action:
            self._action[key] = self.coords(self.act_word(h, self.words[i]))
        return self._action[key]

    def coaction(self, i):
        if i in self._coaction:
            return self._coaction[i]
        out = {}
        for (p, w), s in self.coact_word(self.words[i]).items():
            for k, u in self._word_coords(w).items():
                key = (p, k)
                val = out.get(key, ZERO) + s * u
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        self._coaction[i] = out
        return out

    def coproduct(self, i):
        return self._reduce_pairs(self.coproduct_word(self.words[i]))

    def counit(self, i):
        return ONE if not self.words[i] else ZERO

    def _reduce_pairs(self, pairs):
        out = {}
        for (u, v), s in pairs.items():
            if self.max_degree is not None and len(u) + len(v) > self.max_degree:
                continue
            cu = self._word_coords(u)
            if not cu:
                continue
            cv = self._word_coords(v)
            for a, x in cu.items():
                for b, y in cv.items():
                    key = (a, b)
                    val = out.get(key, ZERO) + s * x * y
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
        return out

    # Checks

    def check_consistency(self):
        """Every relation is stable under the action, the coaction and the braided coproduct"""
        for label, rel in self.R.relations.items():
            for h in range(self.C.dim):
                if self.coords(self.act_poly(h, rel)):
                    raise InconsistentExtension(label, self.C.basis[h])
            coact = {}
            for w, s in rel.items():
                for (p, t), u in self.coact_word(w).items():
                    for k, x in self._word_coords(t).items():
                        key = (p, k)
                        val = coact.get(key, ZERO) + s * u * x
                        if val:
                            coact[key] = val
                        else:
                            coact.pop(key, None)
            if coact:
                raise InconsistentExtension(label, 'coaction')
            cop = {}
            for w, s in rel.items():
                for key, u in self.coproduct_word(w).items():
                    padd_term(cop, key, s * u)
            if self._reduce_pairs(cop):
                raise InconsistentExtension(label, 'coproduct')
        log.debug('%s: relations stable under the YD structure', self.R.name)
        return True

    def module_algebra_report(self):
        """h.(rs) = (h1.r)(h2.s) and delta(rs) = r_(-1)s_(-1) (x) r_(0)s_(0) on generators x basis"""
        report = AxiomReport('YD structure of %s' % self.R.name, 'generators')
        gens = [self.index[(g,)] for g in self.R.generators if (g,) in self.index]
        action_ok, coaction_ok = None, None
        for r in gens:
            for s in range(self.dim):
                rs = self.mul(r, s)
                for h in range(self.C.dim):
                    lhs = {}
                    for k, u in rs.items():
                        axpy(lhs, self.action(h, k), u)
                    rhs = {}
                    for (h1, h2), t in self.C.comult.get(h, {}).items():
                        for k1, u1 in self.action(h1, r).items():
                            for k2, u2 in self.action(h2, s).items():
                                axpy(rhs, self.mul(k1, k2), t * u1 * u2)
                    if lhs != rhs and action_ok is None:
                        action_ok = (self.C.basis[h], format_word(self.words[r]), format_word(self.words[s]))
                lhs = {}
                for k, u in rs.items():
                    axpy(lhs, self.coaction(k), u)
                rhs = {}
                for (p, k1), u1 in self.coaction(r).items():
                    for (q, k2), u2 in self.coaction(s).items():
                        for m, v in self.C.mult.get((p, q), {}).items():
                            for k, x in self.mul(k1, k2).items():
                                key = (m, k)
                                val = rhs.get(key, ZERO) + u1 * u2 * v * x
                                if val:
                                    rhs[key] = val
                                else:
                                    rhs.pop(key, None)
                if lhs != rhs and coaction_ok is None:
                    coaction_ok = (format_word(self.words[r]), format_word(self.words[s]))
        report.add('module_algebra', action_ok is None, action_ok)
        report.add('comodule_algebra', coaction_ok is None, coaction_ok)
        return report


def extend_yd(R, V, C=None):
    return BraidedHopfData(R, V, C)


def trivial_data(C):
    """R = K"""
    return BraidedHopfData(PresentedBraidedAlgebra('K', [], {}), None, C)


class _LazyTable(Mapping):
    """ Read-only table whose rows are computed on first access """
    def __init__(self, keys, compute):
        self._keys = keys
        self._compute = compute
        self._rows = {}

    def __getitem__(self, key):
        row = self._rows.get(key)
        if row is None:
            if key not in self._keys:
                raise KeyError(key)
            row = self._rows[key] = self._compute(key)
        return row

    def get(self, key, default=None):
        try:
            return self[key]
        except KeyError:
            return default

    def __iter__(self):
        return iter(self._keys)

    def __len__(self):
        return len(self._keys)


class _Pairs:
    def __init__(self, n):
        self.n = n

    def __contains__(self, key):
        return isinstance(key, tuple) and len(key) == 2 and all(0 <= k < self.n for k in key)

    def __iter__(self):
        return itertools.product(range(self.n), repeat=2)

    def __len__(self):
        return self.n * self.n


class Biproduct(FinDimHopf):
    """ R#C with products (r#g)(s#h) = r(g1.s)#g2h and coproducts
    Delta(r#g) = r1 # (r2)_(-1) g1 (x) (r2)_(0) # g2
    """
    def __init__(self, data, name=None, generators=None):
        self.data = data
        C = data.C
        self.C = C
        m = C.dim
        n = data.dim * m
        basis = ['%s#%s' % (format_word(w), C.basis[c]) for w in data.words for c in range(m)]
        unit = {data.index[()] * m + c: u for c, u in C.unit.items()}
        counit = [data.counit(k // m) * C.counit[k % m] for k in range(n)]
        mult = _LazyTable(_Pairs(n), self._product)
        comult = _LazyTable(range(n), self._coproduct)
        super().__init__(name or '%s#%s' % (data.R.name, C.name), basis, mult, unit, comult, counit,
                         None, generators)

    def validate(self):
        if len(self.counit) != self.dim:
            raise DimensionMismatch('counit has length %d, expected %d' % (len(self.counit), self.dim))

    def _product(self, key):
        i, j = key
        m = self.C.dim
        (r, g), (s, h) = divmod(i, m), divmod(j, m)
        out = {}
        for (g1, g2), t in self.C.comult.get(g, {}).items():
            gh = self.C.mult.get((g2, h))
            if not gh:
                continue
            for s1, a in self.data.action(g1, s).items():
                for w, b in self.data.mul(r, s1).items():
                    for k, c in gh.items():
                        key = w * m + k
                        val = out.get(key, ZERO) + t * a * b * c
                        if val:
                            out[key] = val
                        else:
                            out.pop(key, None)
        return out

    def _coproduct(self, i):
        m = self.C.dim
        r, g = divmod(i, m)
        out = {}
        for (r1, r2), s in self.data.coproduct(r).items():
            for (p, r2o), t in self.data.coaction(r2).items():
                for (g1, g2), u in self.C.comult.get(g, {}).items():
                    for k, v in self.C.mult.get((p, g1), {}).items():
                        key = (r1 * m + k, r2o * m + g2)
                        val = out.get(key, ZERO) + s * t * u * v
                        if val:
                            out[key] = val
                        else:
                            out.pop(key, None)
        return out

    # Embeddings and projection

    def iota_R(self, p):
        """r -> r#1 for an element of R in basis coordinates"""
        out = {}
        m = self.C.dim
        for k, s in p.items():
            for c, u in self.C.unit.items():
                out[k * m + c] = s * u
        return out

    def iota_C(self, x):
        m = self.C.dim
        one = self.data.index[()]
        return {one * m + c: s for c, s in x.items()}

    def pi(self, x):
        """r#g -> eps(r) g"""
        m = self.C.dim
        out = {}
        for k, s in x.items():
            e = self.data.counit(k // m)
            if e:
                val = out.get(k % m, ZERO) + s * e
                if val:
                    out[k % m] = val
                else:
                    out.pop(k % m, None)
        return out

    def letter(self, g):
        """v_i#1 for a generator of R"""
        return self.iota_R({self.data.index[(g,)]: ONE})


def convolution(H, f, g):
    """f * g for linear maps {j: element}"""
    out = {}
    for i in range(H.dim):
        acc = {}
        for (j, k), s in H.comult.get(i, {}).items():
            fj, gk = f.get(j), g.get(k)
            if fj and gk:
                axpy(acc, H.mul(fj, gk), s)
        if acc:
            out[i] = acc
    return out


def neumann_antipode(H):
    """S = sum_k (-h)^{*k} * u^-1 with u = iota pi, u^-1 = iota S_C pi, h = u^-1 * id - eps.

    h vanishes on R-degree 0 and raises R-degree, so the series stops after the top degree.
    """
    C = H.C
    n = H.dim
    u_inv = {}
    for i in range(n):
        v = H.iota_C(C.S(H.pi({i: ONE})))
        if v:
            u_inv[i] = v
    ident = {i: {i: ONE} for i in range(n)}
    h = convolution(H, u_inv, ident)
    one = H.one()
    for i in range(n):
        if H.counit[i]:
            row = h.setdefault(i, {})
            axpy(row, one, -H.counit[i])
            if not row:
                del h[i]
    neg_h = {i: {k: -s for k, s in v.items()} for i, v in h.items()}
    top = max(len(w) for w in H.data.words)
    S = {i: dict(v) for i, v in u_inv.items()}
    term = u_inv
    for k in range(1, top + 2):
        term = convolution(H, neg_h, term)
        if not term:
            break
        for i, v in term.items():
            axpy(S.setdefault(i, {}), v)
    else:
        raise SingularAntipode('Antipode series of %s does not terminate' % H.name)
    log.debug('%s: antipode series stopped after %d terms', H.name, k)
    return {i: v for i, v in S.items() if v}


def certify_biproduct(H, full_check_max_dim=48):
    """Attach the antipode and run verify_hopf; AxiomFailed carries the report"""
    H.antipode = neumann_antipode(H)
    report = verify_hopf(H, 'hopf', full_check_max_dim)
    if not report.passed:
        raise AxiomFailed(report)
    H.report = report
    log.info('Built %s of dim %d' % (H.name, H.dim))
    return H


def radford_biproduct(data, name=None, generators=None, full_check_max_dim=48):
    """R#C; certified unless R is truncated (a truncated R is not a coalgebra)"""
    H = Biproduct(data, name, generators)
    if data.max_degree is None:
        certify_biproduct(H, full_check_max_dim)
    return H


def coalgebra_defects(H, x, X):
    """Laws a candidate X for Delta(x) breaks: coassociativity, left counit, right counit"""
    left, right = {}, {}
    for (j, k), s in X.items():
        for (a, b), t in H.comult.get(j, {}).items():
            axpy(left, {(a, b, k): t}, s)
        for (a, b), t in H.comult.get(k, {}).items():
            axpy(right, {(j, a, b): t}, s)
    axpy(left, right, -ONE)
    eps_left, eps_right = {}, {}
    for (j, k), s in X.items():
        if H.counit[j]:
            axpy(eps_left, {k: H.counit[j]}, s)
        if H.counit[k]:
            axpy(eps_right, {j: H.counit[k]}, s)
    axpy(eps_left, x, -ONE)
    axpy(eps_right, x, -ONE)
    return [law for law, defect in (('coassociativity', left), ('left counit', eps_left),
                                     ('right counit', eps_right)) if defect]


def coinvariants(H):
    """Basis of {x : (id (x) pi) Delta(x) = x (x) 1}"""
    m = H.C.dim
    rows = {}
    for i in range(H.dim):
        col = {}
        for (j, k), s in H.comul({i: ONE}).items():
            e = H.data.counit(k // m)
            if e:
                key = (j, k % m)
                val = col.get(key, ZERO) + s * e
                if val:
                    col[key] = val
                else:
                    col.pop(key, None)
        for c, u in H.C.unit.items():
            key = (i, c)
            val = col.get(key, ZERO) - u
            if val:
                col[key] = val
            else:
                col.pop(key, None)
        for key, s in col.items():
            rows.setdefault(key, {})[i] = s
    echelon = SparseEchelon(H.dim)
    for key in sorted(rows):
        echelon.add(rows[key])
    return echelon.nullspace()


def coradical_report(H):
    Q = coradical(H)
    closed, witness = is_subalgebra(H, Q)
    return {'coradical_dim': len(Q), 'subalgebra': closed,
            'witness': None if witness is None else [H.format_element(Q[witness[0]]),
                                                     H.format_element(Q[witness[1]])]}


def fingerprint(H):
    """Isomorphism invariants: group-likes, skew-primitives, characters, tr(S^2), order of S"""
    require_certified(H, 'hopf')
    G = grouplikes(H)
    skew = OrderedDict()
    for (a, g), (b, h) in itertools.product(enumerate(G), repeat=2):
        skew['%d,%d' % (a, b)] = len(skew_primitives(H, g, h))
    return OrderedDict([
        ('grouplikes', len(G)),
        ('skew_primitives', skew),
        ('characters', len(grouplikes(dual_hopf(H)))),
        ('trace_S2', trace_of_square(H).to_literal()),
        ('antipode_order', antipode_order(H)),
    ])


def compare_fingerprints(prints):
    out = OrderedDict()
    for (n1, f1), (n2, f2) in itertools.combinations(prints.items(), 2):
        out['%s/%s' % (n1, n2)] = 'separated' if f1 != f2 else 'not separated'
    return out


class BosonizationSuite:
    """ Nichols algebras of the tables, their biproducts with C, and the presentation checks """
    def __init__(self, algebra, tables, full_check_max_dim=48):
        self.algebra = algebra
        self.C = algebra.C
        self.constants = algebra.constants
        self.tables = tables
        self.full_check_max_dim = full_check_max_dim
        self._yd = {}
        self._data = {}
        self._biproducts = {}

    def entry(self, name):
        if name not in self.tables.get('bosonizations', {}):
            raise UnknownName('No biproduct named %s (known: %s)' % (name, ', '.join(BOSONIZATION_NAMES)))
        return self.tables['bosonizations'][name]

    def yd_module(self, name):
        entry = self.tables['nichols_presentations'][self.entry(name)['nichols']]
        if name not in self._yd:
            self._yd[name] = to_yd(module_by_name(entry['module'], self.algebra))
        return self._yd[name]

    def presented(self, name, impose=None, max_degree=None):
        key = self.entry(name)['nichols']
        return PresentedBraidedAlgebra.from_table(key, self.tables['nichols_presentations'][key], self.constants,
                                                  impose, max_degree)

    def data(self, name, impose=None, max_degree=None):
        key = (name, None if impose is None else tuple(impose), max_degree)
        if key not in self._data:
            self._data[key] = BraidedHopfData(self.presented(name, impose, max_degree), self.yd_module(name),
                                              self.C)
        return self._data[key]

    def _generators(self, name, H):
        entry = self.entry(name)
        gens = OrderedDict((label, H.letter(g)) for label, g in entry['generators'].items())
        for label, x in sorted(self.C.generators.items()):
            gens[label] = H.iota_C(x)
        return gens

    def biproduct(self, name):
        if name not in self._biproducts:
            data = self.data(name)
            H = Biproduct(data, '%s#C' % name)
            H.generators = dict(self._generators(name, H))
            self._biproducts[name] = certify_biproduct(H, self.full_check_max_dim)
        return self._biproducts[name]

    def truncated(self, name, impose, degree):
        key = ('truncated', name, tuple(impose), degree)
        if key not in self._biproducts:
            H = Biproduct(self.data(name, impose, degree), '%s#C (deg <= %d)' % (name, degree))
            H.generators = dict(self._generators(name, H))
            self._biproducts[key] = H
        return self._biproducts[key]

    # Evaluation of printed words

    def evaluate(self, name, H, text, polys=None):
        letters = self._generators(name, H)
        acc = H.one()
        for token in str(text).split():
            m = _POLY_TOKEN.match(token)
            if m:
                acc = H.mul(acc, self.evaluate_poly(name, H, polys[m.group(1)], polys))
                continue
            for g in word(token):
                if g not in letters:
                    raise UnknownName('Unknown letter %s in %s' % (g, text))
                acc = H.mul(acc, letters[g])
        return acc

    def evaluate_poly(self, name, H, terms, polys=None):
        out = {}
        for coef, text in terms:
            axpy(out, self.evaluate(name, H, text, polys), table_coefficient(coef, self.constants))
        return out

    def r_degree(self, name, text, polys):
        letters = self.entry(name)['generators']
        deg = 0
        for token in str(text).split():
            m = _POLY_TOKEN.match(token)
            if m:
                deg += max(self.r_degree(name, t, polys) for _, t in polys[m.group(1)])
            else:
                deg += sum(1 for g in word(token) if g in letters)
        return deg

    def verify_presentation(self, name):
        entry = self.entry(name)
        polys = entry.get('polys', {})
        H = self.biproduct(name)
        report = AxiomReport('presentation of %s' % H.name, 'evaluation')
        for label, terms in entry['relations'].items():
            residual = self.evaluate_poly(name, H, terms, polys)
            report.add('relation %s' % label, not residual, (label,) if residual else None,
                       H.format_element(residual) if residual else None)
            if residual and len(terms) == 2:
                scalar = _commutation_scalar(H, self.evaluate(name, H, terms[0][1], polys),
                                             self.evaluate(name, H, terms[1][1], polys))
                if scalar is not None:
                    report.note('%s: computed %s = (%s) %s' % (label, terms[0][1], scalar.to_literal(), terms[1][1]))
        for identity in entry.get('coproducts', []):
            impose = identity.get('impose', [])
            texts = [identity['element']] + [t for _, l, r in identity['terms'] for t in (l, r)]
            degree = max(self.r_degree(name, t, polys) for t in texts)
            T = self.truncated(name, impose, degree)
            x = self.evaluate(name, T, identity['element'], polys)
            lhs = T.comul(x)
            rhs = {}
            for coef, left, right in identity['terms']:
                X = T.tensor(self.evaluate(name, T, left, polys), self.evaluate(name, T, right, polys))
                axpy(rhs, X, table_coefficient(coef, self.constants))
            diff = dict(lhs)
            axpy(diff, rhs, -ONE)
            label = 'coproduct %s' % identity['label']
            misprint = False
            if diff:
                computed = coalgebra_defects(T, x, lhs)
                printed = coalgebra_defects(T, x, rhs)
                misprint = not computed and bool(printed)
                if misprint:
                    report.note('%s: printed side breaks %s' % (label, ', '.join(printed)))
                else:
                    log.warning('%s of %s: computed side breaks %s, printed side breaks %s'
                                % (label, H.name, computed or 'nothing', printed or 'nothing'))
            report.add(label, not diff or misprint, (identity['label'],) if diff else None,
                       T.format_tensor(diff) if diff else None)
        log.info('Presentation of %s: %s' % (H.name, 'pass' if report.passed else 'FAIL'))
        return report

    def build_all(self, names=BOSONIZATION_NAMES):
        return OrderedDict((name, self.biproduct(name)) for name in names)


def _commutation_scalar(H, left, right):
    """s with left = s * right, if any"""
    if not right:
        return None
    k, r = next(iter(sorted(right.items())))
    s = left.get(k, ZERO) / r
    scaled = {i: v * s for i, v in right.items()}
    return s if scaled == left else None
