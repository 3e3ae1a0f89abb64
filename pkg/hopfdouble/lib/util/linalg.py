"""
Exact linear algebra over Q(xi).

Dense matrices are numpy arrays of dtype object holding Scalars; sparse vectors
are dicts {index: Scalar} without zero entries.
"""
import numpy as np

from ..errors import DimensionMismatch, SingularMatrix
from ..scalars import ONE, ZERO, as_scalar


def zeros(nrows, ncols):
    m = np.empty((nrows, ncols), dtype=object)
    m.fill(ZERO)
    return m


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = ONE
    return m


def matrix(rows, ncols=None):
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    m = zeros(len(rows), ncols)
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise DimensionMismatch('Ragged matrix rows', expected=ncols, actual=len(row))
        for j, v in enumerate(row):
            m[i, j] = as_scalar(v)
    return m


def vector(values):
    values = list(values)
    v = np.empty(len(values), dtype=object)
    for i, x in enumerate(values):
        v[i] = as_scalar(x)
    return v


def diag(values):
    values = [as_scalar(v) for v in values]
    m = zeros(len(values), len(values))
    for i, v in enumerate(values):
        m[i, i] = v
    return m


def is_zero(m):
    return not any(np.asarray(m).flat)


def matmul(a, b):
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatch('Cannot multiply %s by %s' % (a.shape, b.shape),
                                expected=a.shape[-1], actual=b.shape[0])
    if a.shape[-1] == 0:
        return zeros(a.shape[0], b.shape[1]) if b.ndim == 2 else zeros(1, a.shape[0])[0]
    return a.dot(b)


def scale(m, s):
    out = np.empty(m.shape, dtype=object)
    flat_in = m.flat
    flat_out = out.flat
    for i, x in enumerate(flat_in):
        flat_out[i] = x * s if x else ZERO
    return out


def kron(a, b):
    ra, ca = a.shape
    rb, cb = b.shape
    return np.multiply.outer(a, b).transpose(0, 2, 1, 3).reshape(ra * rb, ca * cb)


def trace(m):
    acc = ZERO
    for i in range(min(m.shape)):
        acc = acc + m[i, i]
    return acc


def transpose(m):
    return np.ascontiguousarray(m.T)


def rref(m):
    """Reduced row echelon form; returns (matrix, pivot columns)"""
    m = np.asarray(m)
    nrows, ncols = m.shape
    rows = [list(r) for r in m]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        piv = [x * inv if x else ZERO for x in rows[r]]
        rows[r] = piv
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    out = zeros(nrows, ncols)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = x
    return out, pivots


def rank(m):
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m)[1])


def nullspace(m):
    """Basis (list of 1-D arrays) of {v : m v = 0}"""
    m = np.asarray(m)
    ncols = m.shape[1]
    if m.shape[0] == 0:
        return [identity(ncols)[i] for i in range(ncols)]
    r, pivots = rref(m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = zeros(1, ncols)[0]
        v[f] = ONE
        for i, p in enumerate(pivots):
            if r[i, f]:
                v[p] = -r[i, f]
        basis.append(v)
    return basis


def inverse(m):
    n, ncols = m.shape
    if n != ncols:
        raise DimensionMismatch('Only square matrices are invertible', expected=n, actual=ncols)
    aug = zeros(n, 2 * n)
    aug[:, :n] = m
    for i in range(n):
        aug[i, n + i] = ONE
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix('Matrix is singular')
    return np.ascontiguousarray(r[:, n:])


def solve(a, b):
    """One solution x of a x = b (b a vector or matrix), or None when inconsistent"""
    a = np.asarray(a)
    b = np.asarray(b)
    squeeze = b.ndim == 1
    if squeeze:
        b = b.reshape(-1, 1)
    nrows, ncols = a.shape
    if b.shape[0] != nrows:
        raise DimensionMismatch('Right hand side has wrong length', expected=nrows, actual=b.shape[0])
    aug = zeros(nrows, ncols + b.shape[1])
    aug[:, :ncols] = a
    aug[:, ncols:] = b
    r, pivots = rref(aug)
    if any(p >= ncols for p in pivots):
        return None
    x = zeros(ncols, b.shape[1])
    for i, p in enumerate(pivots):
        x[p, :] = r[i, ncols:]
    return x[:, 0].copy() if squeeze else x


def charpoly(m):
    """Characteristic polynomial det(t - m), coefficients lowest degree first (Faddeev-LeVerrier)"""
    n = m.shape[0]
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = zeros(n, n)
    for k in range(1, n + 1):
        mk = matmul(m, mk) if k > 1 else mk
        c = coeffs[n - k + 1]
        for i in range(n):
            mk[i, i] = mk[i, i] + c
        coeffs[n - k] = -trace(matmul(m, mk)) / k
    return coeffs


def to_sparse(v):
    return {i: x for i, x in enumerate(v) if x}


def to_dense(d, n):
    v = zeros(1, n)[0]
    for i, x in d.items():
        v[i] = x
    return v


def axpy(acc, x, s=ONE):
    """acc += s * x for sparse vectors; acc is modified in place"""
    for k, v in x.items():
        val = acc.get(k, ZERO) + s * v
        if val:
            acc[k] = val
        else:
            acc.pop(k, None)
    return acc


class SparseEchelon:
    """ Incremental echelon form over sparse rows {column: Scalar} """
    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, v):
        v = {k: x for k, x in v.items() if x}
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                return v
            axpy(v, row, -v[p])
        return v

    def add(self, v):
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p].inverse()
        self.rows[p] = {k: x * inv for k, x in r.items()}
        return True

    def contains(self, v):
        return not self.reduce(v)

    def reduced_rows(self):
        rows = {p: dict(row) for p, row in self.rows.items()}
        pivots = sorted(rows)
        for p in reversed(pivots):
            prow = rows[p]
            for q in pivots:
                if q >= p:
                    break
                f = rows[q].get(p)
                if f:
                    axpy(rows[q], prow, -f)
        return rows

    def nullspace(self):
        """Kernel of the matrix whose rows were added, as sparse vectors"""
        rows = self.reduced_rows()
        free = [c for c in range(self.ncols) if c not in rows]
        basis = []
        for f in free:
            v = {f: ONE}
            for p, row in rows.items():
                x = row.get(f)
                if x:
                    v[p] = -x
            basis.append(v)
        return basis


def vstack(blocks, ncols):
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return zeros(0, ncols)
    return np.vstack(blocks)


def flatten(m):
    return np.ascontiguousarray(m).reshape(-1)


def to_literals(m):
    m = np.asarray(m)
    if m.ndim == 1:
        return [x.to_literal() for x in m]
    return [[x.to_literal() for x in row] for row in m]


def from_literals(rows):
    return matrix([[as_scalar(str(x)) for x in row] for row in rows])
