"""
Exact arithmetic in K = Q(xi), xi a primitive 6th root of unity.

Elements are stored as (n0 + n1*xi)/d with integers n0, n1, d, d > 0 and
gcd(n0, n1, d) = 1, so that equality of values is equality of fields.
"""
from collections import namedtuple
from fractions import Fraction
from math import gcd
import numbers
import re

import sympy
from sympy.polys.domains import QQ

from .errors import DivisionByZero


def _lcm(a, b):
    return a * b // gcd(a, b)


def _make(n0, n1, d):
    if d < 0:
        n0, n1, d = -n0, -n1, -d
    g = gcd(gcd(n0, n1), d)
    if g > 1:
        n0, n1, d = n0 // g, n1 // g, d // g
    s = Scalar.__new__(Scalar)
    s.n0 = n0
    s.n1 = n1
    s.d = d
    return s


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, numbers.Integral):
        return _make(int(x), 0, 1)
    if isinstance(x, Fraction):
        return _make(x.numerator, 0, x.denominator)
    return None


class Scalar:
    """ Exact element r0 + r1*xi of Q(xi), with xi^2 = xi - 1 """
    __slots__ = ('n0', 'n1', 'd')

    def __init__(self, r0=0, r1=0):
        if isinstance(r0, Scalar) and not r1:
            self.n0, self.n1, self.d = r0.n0, r0.n1, r0.d
            return
        r0 = Fraction(r0)
        r1 = Fraction(r1)
        d = _lcm(r0.denominator, r1.denominator)
        n0 = r0.numerator * (d // r0.denominator)
        n1 = r1.numerator * (d // r1.denominator)
        g = gcd(gcd(n0, n1), d)
        self.n0, self.n1, self.d = n0 // g, n1 // g, d // g

    @property
    def r0(self):
        return Fraction(self.n0, self.d)

    @property
    def r1(self):
        return Fraction(self.n1, self.d)

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.d == o.d:
            return _make(self.n0 + o.n0, self.n1 + o.n1, self.d)
        return _make(self.n0 * o.d + o.n0 * self.d, self.n1 * o.d + o.n1 * self.d, self.d * o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, b0, b1 = self.n0, self.n1, o.n0, o.n1
        return _make(a0 * b0 - a1 * b1, a0 * b1 + a1 * b0 + a1 * b1, self.d * o.d)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero('division by zero in Q(xi)')
        n0, n1 = self.n0, self.n1
        norm = n0 * n0 + n0 * n1 + n1 * n1
        return _make(self.d * (n0 + n1), -self.d * n1, norm)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return _make(-self.n0, -self.n1, self.d)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = ONE
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.n0 == o.n0 and self.n1 == o.n1 and self.d == o.d

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self.n1 == 0:
            return hash(Fraction(self.n0, self.d))
        return hash((self.n0, self.n1, self.d))

    def __bool__(self):
        return self.n0 != 0 or self.n1 != 0

    def __getstate__(self):
        return (self.n0, self.n1, self.d)

    def __setstate__(self, state):
        self.n0, self.n1, self.d = state

    def conjugate(self):
        """Image under xi -> xi^-1 = 1 - xi"""
        return _make(self.n0 + self.n1, -self.n1, self.d)

    def norm(self):
        n0, n1 = self.n0, self.n1
        return Fraction(n0 * n0 + n0 * n1 + n1 * n1, self.d * self.d)

    def is_rational(self):
        return self.n1 == 0

    def sort_key(self):
        return (self.r0, self.r1)

    def to_literal(self):
        r0, r1 = self.r0, self.r1
        parts = []
        if r0:
            parts.append(str(r0))
        if r1:
            if r1 == 1:
                term = 'x'
            elif r1 == -1:
                term = '-x'
            else:
                term = str(r1) + '*x'
            if parts and r1 > 0:
                term = '+' + term
            parts.append(term)
        return ''.join(parts) if parts else '0'

    __str__ = to_literal

    def __repr__(self):
        return "Scalar('%s')" % self.to_literal()


ZERO = _make(0, 0, 1)
ONE = _make(1, 0, 1)
XI = _make(0, 1, 1)

_TERM = re.compile(r'[+-]?[^+-]+')


def parse_literal(text):
    """Parse the literal format 'p/q+r/s*x' (x stands for xi)"""
    s = str(text).replace(' ', '')
    tokens = _TERM.findall(s)
    if not tokens or ''.join(tokens) != s:
        raise ValueError('Invalid scalar literal: %r' % text)
    r0 = Fraction(0)
    r1 = Fraction(0)
    for tok in tokens:
        if tok.endswith('x'):
            coef = tok[:-1]
            if coef.endswith('*'):
                coef = coef[:-1]
            if coef in ('', '+'):
                r1 += 1
            elif coef == '-':
                r1 -= 1
            else:
                r1 += Fraction(coef)
        else:
            r0 += Fraction(tok)
    return Scalar(r0, r1)


def as_scalar(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_literal(value)
    c = _coerce(value)
    if c is None:
        raise TypeError('Cannot convert %r to Scalar' % (value,))
    return c


_XI_POWERS = [ONE]
for _k in range(5):
    _XI_POWERS.append(_XI_POWERS[-1] * XI)


def xi_power(k):
    return _XI_POWERS[k % 6]


NamedConstants = namedtuple('NamedConstants', 'xi lam theta theta_sign')


def named_constants(theta_sign='plus'):
    """xi, Lambda = (xi-1)/(xi+1) and theta with theta^2 = xi - 1 (theta = +xi or -xi)"""
    if theta_sign not in ('plus', 'minus'):
        raise ValueError('theta_sign must be plus or minus, got %r' % (theta_sign,))
    lam = (XI - 1) / (XI + 1)
    theta = XI if theta_sign == 'plus' else -XI
    return NamedConstants(XI, lam, theta, theta_sign)


# Polynomials over K are coefficient lists, lowest degree first.

_SQRT_M3 = sympy.sqrt(-3)
_FIELD = QQ.algebraic_field(_SQRT_M3)
_T = sympy.Symbol('t')


def poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_eval(p, t):
    acc = ZERO
    for c in reversed(p):
        acc = acc * t + c
    return acc


def to_sympy(s):
    """xi = (1 + sqrt(-3)) / 2"""
    return sympy.Rational(s.n0, s.d) + sympy.Rational(s.n1, s.d) * (1 + _SQRT_M3) / 2


def from_sympy(expr):
    a = sympy.re(expr)
    c = sympy.im(expr) / sympy.sqrt(3)
    if not (a.is_Rational and c.is_Rational):
        raise ValueError('%s is not in Q(xi)' % expr)
    a = Fraction(int(a.p), int(a.q))
    c = Fraction(int(c.p), int(c.q))
    return Scalar(a - c, 2 * c)


def roots_in_field(coeffs):
    """Distinct roots in K of the polynomial with the given coefficients (lowest degree first).

    The polynomial is factored exactly over Q(sqrt(-3)); the roots are read off the
    linear factors and checked by evaluation.
    """
    p = poly_trim([as_scalar(c) for c in coeffs])
    if not p:
        raise ValueError('The zero polynomial has no finite root set')
    if len(p) == 1:
        return []
    poly = sympy.Poly([to_sympy(c) for c in reversed(p)], _T, domain=_FIELD)
    roots = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() != 1:
            continue
        root = from_sympy(-factor.monic().all_coeffs()[1])
        if poly_eval(p, root):
            raise ArithmeticError('Linear factor of %s gives a non-root %s' % (poly.as_expr(), root))
        roots.append(root)
    return sorted(set(roots), key=Scalar.sort_key)
