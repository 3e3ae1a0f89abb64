import pytest

from hopfdouble.lib.errors import NonConfluent
from hopfdouble.lib.scalars import XI, ZERO
from hopfdouble.lib.util.Rewriting import (RewritingSystem, evaluate, format_poly, format_word, pmul, poly,
                                           word)


def quantum_plane():
    """a^3 = 0, b^2 = 0, ba = xi ab"""
    return RewritingSystem(['a', 'b'], [poly((1, 'a^3')), poly((1, 'b^2')), poly((1, 'b a'), ('-x', 'a b'))],
                           order=['a', 'b'])


def test_word_tokens():
    assert word('b a^3 g') == ('b', 'a', 'a', 'a', 'g')
    assert word('') == ()
    assert word(('a',)) == ('a',)
    with pytest.raises(ValueError):
        word('a^')


def test_format():
    assert format_word(()) == '1'
    assert format_word(('b', 'a', 'a')) == 'b a^2'
    assert format_poly({}) == '0'
    assert format_poly(poly((1, 'a'), (-1, 'b'))) == 'a + -b'


def test_reduce_to_normal_form():
    rs = quantum_plane()
    assert rs.reduce(poly((1, 'b a'))) == {('a', 'b'): XI}
    assert rs.reduce(poly((1, 'b a b'))) == {}
    assert rs.reduce(poly((1, 'b a^2'))) == {('a', 'a', 'b'): XI * XI}


def test_basis_and_hilbert_numbers():
    rs = quantum_plane()
    rs.check_confluence()
    words, complete = rs.basis(10)
    assert complete
    assert len(words) == 6
    counts, complete = rs.hilbert_numbers(10)
    assert counts == [1, 2, 2, 1]


def test_non_confluent_system():
    rs = RewritingSystem(['x', 'y'], [poly((1, 'x^2'), (-1, 'y'))], order=['x', 'y'])
    with pytest.raises(NonConfluent):
        rs.check_confluence()


def test_infinite_basis_is_reported_incomplete():
    rs = RewritingSystem(['a', 'b'], [poly((1, 'b a'), (-1, 'a b'))])
    words, complete = rs.basis(4)
    assert not complete
    assert sum(1 for w in words if len(w) == 4) == 5


def test_evaluate_in_integers():
    p = pmul(poly((1, 'a')), poly((1, 'a'), (2, 'b')))
    value = evaluate(p, {'a': 3, 'b': 5}, lambda x, y: x * y, 1,
                     lambda acc, v, c: (acc or ZERO) + c * v)
    assert value == 3 * 3 + 2 * 3 * 5
