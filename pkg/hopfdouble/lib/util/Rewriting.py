"""
Noncommutative polynomials over Q(xi) and rewriting systems on words.

A polynomial is a dict {word: Scalar} where a word is a tuple of generator labels.
"""
import re

from ..errors import NonConfluent
from ..scalars import ONE, ZERO, as_scalar

_POWER = re.compile(r'^(\w+?)(?:\^(\d+))?$')


def word(text):
    """'b a^3 g' -> ('b', 'a', 'a', 'a', 'g'); tuples pass through"""
    if isinstance(text, tuple):
        return text
    out = []
    for token in text.split():
        m = _POWER.match(token)
        if not m:
            raise ValueError('Bad word token %r' % token)
        out.extend([m.group(1)] * int(m.group(2) or 1))
    return tuple(out)


def poly(*terms):
    """poly((coef, 'b a'), (coef, 'a b'), ...); coefficients accept scalar literals"""
    out = {}
    for coef, w in terms:
        padd_term(out, word(w), as_scalar(coef))
    return out


def padd_term(p, w, c):
    val = p.get(w, ZERO) + c
    if val:
        p[w] = val
    else:
        p.pop(w, None)
    return p


def padd(p, q, s=ONE):
    out = dict(p)
    for w, c in q.items():
        padd_term(out, w, s * c)
    return out


def pscale(p, s):
    return {w: c * s for w, c in p.items() if c * s}


def pmul(p, q):
    out = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            padd_term(out, w1 + w2, c1 * c2)
    return out


def degree(p):
    return max((len(w) for w in p), default=-1)


def format_word(w):
    if not w:
        return '1'
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(w[i] if j - i == 1 else '%s^%d' % (w[i], j - i))
        i = j
    return ' '.join(parts)


def format_poly(p):
    if not p:
        return '0'
    terms = []
    for w in sorted(p, key=lambda w: (len(w), w)):
        c = p[w]
        lit = c.to_literal()
        coef = '' if c == 1 else ('-' if c == -1 else '(%s)' % lit)
        terms.append('%s%s' % (coef, format_word(w)))
    return ' + '.join(terms)


def evaluate(p, assignment, mul, one, add):
    """Evaluate p with generators mapped by `assignment`.

    add(acc, value, coef) returns acc + coef*value, acc is None initially.
    """
    cache = {(): one}

    def value(w):
        v = cache.get(w)
        if v is None:
            if w[-1] not in assignment:
                raise KeyError('No value for generator %s' % w[-1])
            v = mul(value(w[:-1]), assignment[w[-1]])
            cache[w] = v
        return v
    acc = None
    for w in sorted(p, key=lambda w: (len(w), w)):
        acc = add(acc, value(w), p[w])
    return acc


class RewritingSystem:
    """ Rules lead -> tail from relations, under degree-lexicographic order """
    def __init__(self, generators, relations=(), order=None):
        self.generators = list(generators)
        # ascending: order[0] is the smallest generator
        self.order = list(order or generators)
        self.rank = {g: i for i, g in enumerate(self.order)}
        self.rules = {}
        self._lengths = []
        for rel in relations:
            self.add_relation(rel)

    def key(self, w):
        return (len(w), tuple(self.rank[g] for g in w))

    def leading(self, p):
        return max(p, key=self.key)

    def add_relation(self, p):
        if not p:
            return
        lead = self.leading(p)
        inv = p[lead].inverse()
        self.rules[lead] = {w: -c * inv for w, c in p.items() if w != lead}
        self._lengths = sorted({len(l) for l in self.rules})

    def _find(self, w):
        for i in range(len(w)):
            for n in self._lengths:
                if i + n > len(w):
                    break
                sub = w[i:i + n]
                if sub in self.rules:
                    return i, sub
        return None

    def rewrite_at(self, w, pos, lead):
        out = {}
        prefix, suffix = w[:pos], w[pos + len(lead):]
        for t, c in self.rules[lead].items():
            padd_term(out, prefix + t + suffix, c)
        return out

    def reduce(self, p):
        """Normal form of p"""
        if not self.rules:
            return dict(p)
        result = {}
        work = dict(p)
        while work:
            w = max(work, key=self.key)
            c = work.pop(w)
            hit = self._find(w)
            if hit is None:
                padd_term(result, w, c)
                continue
            for t, s in self.rewrite_at(w, *hit).items():
                padd_term(work, t, c * s)
        return result

    def multiply(self, p, q):
        return self.reduce(pmul(p, q))

    def overlaps(self):
        leads = sorted(self.rules, key=self.key)
        for l1 in leads:
            for l2 in leads:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        yield l1 + l2[k:], (0, l1), (len(l1) - k, l2)
                if l1 != l2 and len(l2) <= len(l1):
                    for i in range(len(l1) - len(l2) + 1):
                        if l1[i:i + len(l2)] == l2:
                            yield l1, (0, l1), (i, l2)

    def check_confluence(self):
        """Raise NonConfluent unless every overlap resolves"""
        for w, (p1, l1), (p2, l2) in self.overlaps():
            r1 = self.reduce(self.rewrite_at(w, p1, l1))
            r2 = self.reduce(self.rewrite_at(w, p2, l2))
            residual = padd(r1, r2, -ONE)
            if residual:
                raise NonConfluent(format_word(w), format_poly(residual))
        return True

    def basis(self, max_degree=64):
        """Normal words by degree; (words, complete) where complete means no normal word exceeds the last degree"""
        words = [()]
        frontier = [()]
        degree = 0
        while frontier and degree < max_degree:
            nxt = []
            for w in frontier:
                for g in self.order:
                    cand = w + (g,)
                    if self._suffix_normal(cand):
                        nxt.append(cand)
            frontier = sorted(nxt, key=self.key)
            words.extend(frontier)
            degree += 1
        return words, not frontier

    def _suffix_normal(self, w):
        for lead in self.rules:
            n = len(lead)
            if n <= len(w) and w[len(w) - n:] == lead:
                return False
        return True

    def hilbert_numbers(self, max_degree=64):
        words, complete = self.basis(max_degree)
        counts = [0] * (max(len(w) for w in words) + 1)
        for w in words:
            counts[len(w)] += 1
        return counts, complete
