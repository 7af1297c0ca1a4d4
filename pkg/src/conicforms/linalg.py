"""Dense exact linear algebra over any field-like element domain.

Entries are operator-capable objects (RatFunc, LElement, Elt wrappers, ...)
with an ``is_zero`` method; the domain object supplies ``zero()``/``one()``.
Everything is plain Gaussian elimination with exact division.
"""

from __future__ import annotations


class SingularMatrixError(ValueError):
    pass


class Matrix:
    __slots__ = ("dom", "m", "n", "rows")

    def __init__(self, dom, rows):
        self.dom = dom
        self.rows = [list(r) for r in rows]
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, dom, n):
        z, o = dom.zero(), dom.one()
        return cls(dom, [[o if i == j else z for j in range(n)]
                         for i in range(n)])

    @classmethod
    def zeros(cls, dom, m, n):
        z = dom.zero()
        return cls(dom, [[z for _ in range(n)] for _ in range(m)])

    def copy(self):
        return Matrix(self.dom, self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.rows[i][j] = v

    def __eq__(self, o):
        return (isinstance(o, Matrix) and self.m == o.m and self.n == o.n
                and all((self.rows[i][j] - o.rows[i][j]).is_zero()
                        for i in range(self.m) for j in range(self.n)))

    def __add__(self, o):
        return Matrix(self.dom, [[a + b for a, b in zip(ra, rb)]
                                 for ra, rb in zip(self.rows, o.rows)])

    def __sub__(self, o):
        return Matrix(self.dom, [[a - b for a, b in zip(ra, rb)]
                                 for ra, rb in zip(self.rows, o.rows)])

    def __neg__(self):
        return Matrix(self.dom, [[-a for a in r] for r in self.rows])

    def __mul__(self, o):
        if isinstance(o, Matrix):
            if self.n != o.m:
                raise ValueError("shape mismatch")
            ot = o.transpose().rows
            out = []
            for r in self.rows:
                row = []
                for c in ot:
                    acc = self.dom.zero()
                    for a, b in zip(r, c):
                        if not a.is_zero() and not b.is_zero():
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return Matrix(self.dom, out)
        return Matrix(self.dom, [[a * o for a in r] for r in self.rows])

    def transpose(self):
        return Matrix(self.dom, [[self.rows[i][j] for i in range(self.m)]
                                 for j in range(self.n)])

    def map(self, fn, dom=None):
        return Matrix(dom or self.dom, [[fn(a) for a in r] for r in self.rows])

    def col(self, j):
        return [self.rows[i][j] for i in range(self.m)]

    def submatrix(self, rows, cols):
        return Matrix(self.dom, [[self.rows[i][j] for j in cols]
                                 for i in rows])

    def hstack(self, o):
        return Matrix(self.dom, [ra + rb for ra, rb in zip(self.rows, o.rows)])

    def vstack(self, o):
        return Matrix(self.dom, self.rows + o.rows)

    @classmethod
    def block_diag(cls, dom, blocks):
        m = sum(b.m for b in blocks)
        n = sum(b.n for b in blocks)
        out = cls.zeros(dom, m, n)
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.m):
                for j in range(b.n):
                    out.rows[i0 + i][j0 + j] = b.rows[i][j]
            i0 += b.m
            j0 += b.n
        return out

    def kronecker(self, o):
        """Kronecker product, row-major pairing of indices."""
        out = []
        for i in range(self.m):
            for k in range(o.m):
                row = []
                for j in range(self.n):
                    a = self.rows[i][j]
                    row.extend(a * b for b in o.rows[k])
                out.append(row)
        return Matrix(self.dom, out)

    def is_zero(self):
        return all(a.is_zero() for r in self.rows for a in r)

    def det(self):
        if self.m != self.n:
            raise ValueError("det of non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.n
        det = self.dom.one()
        neg = False
        for c in range(n):
            piv = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
            if piv is None:
                return self.dom.zero()
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                neg = not neg
            det = det * a[c][c]
            inv = self.dom.one() / a[c][c]
            for r in range(c + 1, n):
                if a[r][c].is_zero():
                    continue
                f = a[r][c] * inv
                for j in range(c, n):
                    a[r][j] = a[r][j] - f * a[c][j]
        return -det if neg else det

    def rref(self):
        """Reduced row echelon form; returns (R, pivot_columns)."""
        a = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.n):
            if r >= self.m:
                break
            piv = next((i for i in range(r, self.m) if not a[i][c].is_zero()),
                       None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = self.dom.one() / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.m):
                if i != r and not a[i][c].is_zero():
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.dom, a), pivots

    def rank(self):
        return len(self.rref()[1])

    def inverse(self):
        if self.m != self.n:
            raise ValueError("inverse of non-square matrix")
        aug = self.hstack(Matrix.identity(self.dom, self.n))
        red, pivots = aug.rref()
        if pivots != list(range(self.n)):
            raise SingularMatrixError("matrix is singular")
        return red.submatrix(range(self.n), range(self.n, 2 * self.n))

    def solve(self, b):
        """One solution x of self * x = b (b a Matrix), or raise."""
        aug = self.hstack(b)
        red, pivots = aug.rref()
        if any(p >= self.n for p in pivots):
            raise SingularMatrixError("inconsistent linear system")
        x = Matrix.zeros(self.dom, self.n, b.n)
        for r, c in enumerate(pivots):
            for j in range(b.n):
                x.rows[c][j] = red.rows[r][self.n + j]
        return x

    def right_kernel(self):
        """Basis of the null space, as a list of column vectors (Matrix n x 1)."""
        red, pivots = self.rref()
        free = [j for j in range(self.n) if j not in pivots]
        basis = []
        for f in free:
            v = [self.dom.zero()] * self.n
            v[f] = self.dom.one()
            for r, c in enumerate(pivots):
                v[c] = -red.rows[r][f]
            basis.append(Matrix(self.dom, [[x] for x in v]))
        return basis

    def column_space_pivots(self):
        """Indices of a maximal independent subset of columns."""
        return self.rref()[1]

    def __repr__(self):
        return "[" + "; ".join(", ".join(repr(a) for a in r)
                               for r in self.rows) + "]"
