import pytest

from hopfdouble.lib.errors import DimensionMismatch, SingularMatrix
from hopfdouble.lib.scalars import ONE, XI, ZERO
from hopfdouble.lib.util import linalg
from hopfdouble.lib.util.linalg import SparseEchelon


def test_rank_and_nullspace():
    m = linalg.matrix([[1, 'x', 0], [2, '2*x', 0], [0, 1, 1]])
    assert linalg.rank(m) == 2
    kernel = linalg.nullspace(m)
    assert len(kernel) == 1
    assert linalg.is_zero(linalg.matmul(m, kernel[0]))


def test_inverse():
    m = linalg.matrix([[1, 'x'], [0, '1-x']])
    inv = linalg.inverse(m)
    assert linalg.is_zero(linalg.matmul(m, inv) - linalg.identity(2))


def test_inverse_of_singular_matrix():
    with pytest.raises(SingularMatrix):
        linalg.inverse(linalg.matrix([[1, 2], [2, 4]]))


def test_ragged_rows():
    with pytest.raises(DimensionMismatch):
        linalg.matrix([[1, 2], [3]])


def test_matmul_shape_check():
    with pytest.raises(DimensionMismatch):
        linalg.matmul(linalg.identity(2), linalg.identity(3))


def test_solve():
    a = linalg.matrix([[1, 1], [0, 'x']])
    b = linalg.vector([2, 'x'])
    x = linalg.solve(a, b)
    assert list(x) == [ONE, ONE]
    assert linalg.solve(linalg.matrix([[1], [1]]), linalg.vector([0, 1])) is None


def test_charpoly_of_diagonal():
    coeffs = linalg.charpoly(linalg.diag([1, 'x']))
    assert coeffs == [XI, -(1 + XI), ONE]


def test_kron_is_row_major():
    a = linalg.matrix([[1, 2], [3, 4]])
    b = linalg.identity(2)
    k = linalg.kron(a, b)
    assert k.shape == (4, 4)
    assert k[0, 2] == 2
    assert k[3, 1] == 3
    assert k[0, 1] == ZERO


def test_sparse_echelon():
    e = SparseEchelon(3)
    assert e.add({0: ONE, 1: XI})
    assert e.add({1: ONE, 2: ONE})
    assert not e.add({0: ONE, 1: XI + 1, 2: ONE})
    assert e.rank == 2
    assert e.contains({0: 2 * ONE, 1: 2 * XI})
    kernel = e.nullspace()
    assert len(kernel) == 1
    v = kernel[0]
    for row in e.rows.values():
        assert sum((s * v.get(k, ZERO) for k, s in row.items()), ZERO) == 0


def test_axpy_drops_zeros():
    acc = {0: ONE, 1: XI}
    linalg.axpy(acc, {1: XI, 2: ONE}, -ONE)
    assert acc == {0: ONE, 2: -ONE}


def test_literals():
    m = linalg.matrix([['1/2', 'x'], [0, '-1+x']])
    assert linalg.to_literals(m) == [['1/2', 'x'], ['0', '-1+x']]
    assert linalg.is_zero(linalg.from_literals(linalg.to_literals(m)) - m)
