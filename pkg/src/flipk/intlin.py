"""Exact integer matrix algebra.

Everything here works on Python ints, so entries never overflow.  The Smith
normal form routine is the textbook pivot-and-reduce algorithm; inputs in
this package are small, so clarity and determinism win over speed.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    """Dense rows x cols integer matrix stored row-major in a tuple."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        entries = tuple(_as_int(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("rows must be given for a matrix with no columns")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls(rows, len(columns),
                   tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values, rows=None, cols=None):
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        if len(values) > min(rows, cols):
            raise ValueError("too many diagonal values for the shape")
        data = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = v
        return cls.from_rows(data, cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def T(self):
        return IntMatrix.from_columns(self.tolist(), self.cols)

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a = self.tolist()
        bt = [other.column(j) for j in range(other.cols)]
        return IntMatrix(self.rows, other.cols, tuple(
            sum(x * y for x, y in zip(ra, cb)) for ra in a for cb in bt))

    def apply(self, vector):
        """Matrix-vector product as a list."""
        vector = list(vector)
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum(x * y for x, y in zip(self.row(i), vector)) for i in range(self.rows)]

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return IntMatrix.from_rows(
            [self.row(i) + other.row(i) for i in range(self.rows)],
            self.cols + other.cols)

    def is_diagonal(self):
        return all(self[i, j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal_entries(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def __str__(self):
        return "[" + ", ".join(str(r) for r in self.tolist()) + "]"


def _as_int(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    return operator.index(x)


def det(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """``u @ m @ v == s`` with u, v unimodular and s in Smith form."""

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    @property
    def divisors(self):
        return self.s.diagonal_entries()

    @property
    def rank(self):
        return sum(1 for d in self.divisors if d != 0)


def snf(m):
    """Smith normal form with transformation matrices.

    The pivot at each stage is the nonzero entry of smallest absolute value
    in the trailing submatrix, ties broken by lowest (row, col).  Diagonal
    entries come out nonnegative, each dividing the next, zeros last.
    """
    r, c = m.rows, m.cols
    a = m.tolist()
    u = IntMatrix.identity(r).tolist()
    v = IntMatrix.identity(c).tolist()

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row[dst] += k * row[src]
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(r, c)):
        while True:
            pivot = None
            for i in range(t, r):
                for j in range(t, c):
                    x = a[i][j]
                    if x and (pivot is None or abs(x) < pivot[0]):
                        pivot = (abs(x), i, j)
            if pivot is None:
                return _finish(u, a, v, r, c)
            _, pi, pj = pivot
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]

            dirty = False
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue

            bad_row = next((i for i in range(t + 1, r)
                            if any(a[i][j] % p for j in range(t + 1, c))), None)
            if bad_row is not None:
                add_row(t, bad_row, 1)
                continue

            if p < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            break
    return _finish(u, a, v, r, c)


def _finish(u, a, v, r, c):
    return SnfResult(IntMatrix.from_rows(u, r),
                     IntMatrix.from_rows(a, c),
                     IntMatrix.from_rows(v, c))


def elementary_divisors(m):
    """Full diagonal of the Smith form, units and zeros included."""
    return tuple(snf(m).divisors)


def rank(m):
    return snf(m).rank


def flip_matrix(n):
    """The 2x2 matrix [[-n, (n^2-n)/2], [-n, (n^2+n)/2]].

    Rows are coordinates on ([e+], [e-]); the columns are the images of the
    two generators of the ideal's K_0 under the connecting map.
    """
    n = _as_int(n)
    if n < 1:
        raise ValueError(f"flip_matrix needs n >= 1, got {n}")
    return IntMatrix.from_rows([[-n, (n * n - n) // 2], [-n, (n * n + n) // 2]])


def solve(a, b):
    """An integer vector y with ``a @ y == b``, or None if none exists."""
    b = list(b)
    if len(b) != a.rows:
        raise ValueError("right-hand side has the wrong length")
    res = snf(a)
    ub = res.u.apply(b)
    d = res.divisors
    z = [0] * a.cols
    for i in range(a.rows):
        di = d[i] if i < len(d) else 0
        if di == 0:
            if ub[i] != 0:
                return None
        else:
            q, rem = divmod(ub[i], di)
            if rem:
                return None
            z[i] = q
    return res.v.apply(z)


def kernel_basis(m):
    """Columns spanning the integer kernel of m (a saturated lattice)."""
    res = snf(m)
    k = res.rank
    return IntMatrix.from_columns([res.v.column(j) for j in range(k, m.cols)], m.cols)


def inverse(m):
    """Inverse of a unimodular matrix; raises if m is not invertible over Z."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    cols = []
    for j in range(n):
        y = solve(m, [int(i == j) for i in range(n)])
        if y is None:
            raise ValueError("matrix is not unimodular")
        cols.append(y)
    return IntMatrix.from_columns(cols, n)


@dataclass(frozen=True)
class Cokernel:
    """Canonical form of Z^rows / im(m) plus the base change to reach it.

    ``to_canonical`` sends a vector of Z^rows to its coordinates on the
    canonical generators (free first, then torsion in invariant-factor
    order); ``from_canonical`` has as column j a representative of canonical
    generator j.  Coordinates on torsion generators are defined modulo the
    generator's order.
    """

    group: object
    to_canonical: IntMatrix
    from_canonical: IntMatrix

    def coordinates(self, vector):
        coords = self.to_canonical.apply(vector)
        return [c % t if t else c for c, t in zip(coords, self.group.orders)]

    def transport(self, action):
        """Matrix of an endomorphism of Z^rows (preserving im m) on canonical generators."""
        return self.to_canonical @ action @ self.from_canonical


def cokernel(m):
    from .fgab import FgAbGroup

    res = snf(m)
    d = res.divisors
    diag = [d[i] if i < len(d) else 0 for i in range(m.rows)]
    free = [i for i, x in enumerate(diag) if x == 0]
    tors = [i for i, x in enumerate(diag) if x > 1]
    picked = free + tors
    uinv = inverse(res.u)
    group = FgAbGroup(len(free), tuple(diag[i] for i in tors))
    to_can = IntMatrix.from_rows([res.u.row(i) for i in picked], m.rows)
    from_can = IntMatrix.from_columns([uinv.column(i) for i in picked], m.rows)
    return Cokernel(group, to_can, from_can)


def kernel(m):
    from .fgab import FgAbGroup

    return FgAbGroup(m.cols - rank(m), ())
