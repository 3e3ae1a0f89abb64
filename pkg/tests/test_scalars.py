from fractions import Fraction

import pytest
import sympy

from hopfdouble.lib.errors import DivisionByZero
from hopfdouble.lib.scalars import (ONE, XI, ZERO, Scalar, as_scalar, from_sympy, named_constants, parse_literal,
                                    roots_in_field, to_sympy, xi_power)


def test_xi_is_a_primitive_sixth_root():
    assert XI ** 2 == XI - 1
    assert XI ** 3 == -1
    assert XI ** 6 == 1
    assert all(XI ** k != 1 for k in range(1, 6))


def test_xi_power_wraps_around():
    assert xi_power(7) == XI
    assert xi_power(-1) == 1 - XI
    assert xi_power(-1) == XI.inverse()


def test_parse_literal():
    s = parse_literal('1/2+3/4*x')
    assert s.r0 == Fraction(1, 2)
    assert s.r1 == Fraction(3, 4)
    assert parse_literal('-x') == -XI
    assert parse_literal('1-x') == ONE - XI
    assert parse_literal('0') == ZERO


@pytest.mark.parametrize('text', ['1/2+3/4*x', '-x', '2', '-1/3-5*x', '0'])
def test_literal_is_canonical(text):
    assert as_scalar(parse_literal(text).to_literal()) == parse_literal(text)


def test_bad_literal():
    with pytest.raises(ValueError):
        parse_literal('abc')


def test_field_operations():
    a = Scalar(Fraction(2, 3), -1)
    b = 1 + XI
    assert a * a.inverse() == 1
    assert (a + b) - b == a
    assert a / b * b == a
    assert -(-a) == a
    assert (1 + XI) * (2 - XI) == 3


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_equality_with_integers_and_hash():
    assert Scalar(2) == 2
    assert hash(Scalar(2)) == hash(2)
    assert {XI: 1}[parse_literal('x')] == 1
    assert not ZERO
    assert XI


@pytest.mark.parametrize('sign', ['plus', 'minus'])
def test_named_constants(sign):
    const = named_constants(sign)
    assert const.theta ** 2 == XI - 1
    assert const.lam * (XI + 1) == XI - 1


def test_named_constants_rejects_unknown_sign():
    with pytest.raises(ValueError):
        named_constants('zero')


def test_roots_in_field():
    # (t - 1)(t - xi)(t + xi)
    coeffs = [XI ** 2, -(XI ** 2), -1, 1]
    roots = roots_in_field(coeffs)
    assert set(roots) == {ONE, XI, -XI}
    # t^2 + 1 has no root in Q(xi)
    assert roots_in_field([1, 0, 1]) == []
    assert roots_in_field([0, 0, 1]) == [ZERO]


def test_conjugate_is_the_inverse_of_xi():
    assert XI.conjugate() == ONE - XI
    assert XI * XI.conjugate() == ONE


def test_roots_with_large_close_roots():
    big = Scalar(10 ** 8)
    # (t - big)(t - big - xi)
    coeffs = [big * (big + XI), -(big + big + XI), 1]
    assert roots_in_field(coeffs) == [big, big + XI]


def test_repeated_root_is_listed_once():
    # (t - xi)^3
    assert roots_in_field([-(XI ** 3), 3 * XI ** 2, -3 * XI, 1]) == [XI]


def test_sympy_conversion():
    assert from_sympy(to_sympy(XI)) == XI
    with pytest.raises(ValueError):
        from_sympy(sympy.sqrt(2))
