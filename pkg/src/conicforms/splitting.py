"""Normal form of invertible matrices over K(u) under GL(O_S) x GL(O_V).

Every invertible matrix g over K(u) can be brought to the shape
diag((u-1)**k_1, ..., (u-1)**k_n) by multiplying with p in GL_n(O_S) on the
left and q in GL_n(O_V) on the right; the exponent multiset is an invariant
of the double coset.  This is the matrix form of the splitting of vector
bundles over the projective line into line bundles.

The certificate (p, q, exponents) is checked by ``verify_certificate`` with
exact arithmetic, so callers never need to trust the reduction path.

Two reduction strategies are combined:

* a sweep that triangularizes over O_V by column operations and then
  repeatedly diagonalizes lower 2x2 blocks (``diag_2x2`` implements the
  two-sided reduction with the strictly decreasing weight
  w(a) - w(c), w = val0 + val_inf); the sweep is capped, because block
  operations can reintroduce off-diagonal entries elsewhere;
* a section-peeling recursion that is guaranteed to terminate: find the
  largest twist k admitting a section (a nonzero v over O_V with
  g*v*(u-1)**k integral over O_S), split off that line, and recurse on the
  quotient.  Row residues are cleared with the Laurent approximation, which
  applies because the quotient twists never exceed the peeled one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basefields import Elt, EltDomain
from .linalg import Matrix, SingularMatrixError
from .ratfunc import RationalFunctionField

_SWEEP_CAP = 400


class ZeroPivotError(ValueError):
    pass


@dataclass
class NormalFormCertificate:
    p: Matrix
    q: Matrix
    exponents: list

    def diagonal(self, R):
        um1 = R.u_minus_1()
        n = len(self.exponents)
        D = Matrix.zeros(R, n, n)
        for i, k in enumerate(self.exponents):
            D[i, i] = um1 ** k
        return D


def _w(R, f):
    return R.val0(f) + R.val_inf(f)


# -- elementary two-sided operations ----------------------------------------


def _col_addmul(W, q, j, i, c):
    """col_j += c * col_i on the working matrix and on q."""
    for r in range(W.m):
        W[r, j] = W[r, j] + c * W[r, i]
    for r in range(q.m):
        q[r, j] = q[r, j] + c * q[r, i]


def _col_scale(W, q, j, c):
    for r in range(W.m):
        W[r, j] = W[r, j] * c
    for r in range(q.m):
        q[r, j] = q[r, j] * c


def _col_swap(W, q, i, j):
    for r in range(W.m):
        W[r, i], W[r, j] = W[r, j], W[r, i]
    for r in range(q.m):
        q[r, i], q[r, j] = q[r, j], q[r, i]


def _row_addmul(W, p, i, j, c):
    """row_i += c * row_j on the working matrix and on p."""
    for s in range(W.n):
        W[i, s] = W[i, s] + c * W[j, s]
    for s in range(p.n):
        p[i, s] = p[i, s] + c * p[j, s]


def _row_scale(W, p, i, c):
    for s in range(W.n):
        W[i, s] = W[i, s] * c
    for s in range(p.n):
        p[i, s] = p[i, s] * c


def _row_swap(W, p, i, j):
    W.rows[i], W.rows[j] = W.rows[j], W.rows[i]
    p.rows[i], p.rows[j] = p.rows[j], p.rows[i]


# -- column reduction over O_V -----------------------------------------------


def _ov_gcd_pair(R, f, g):
    """Generator of the fractional O_V-ideal (f, g) with cofactors.

    Returns (h, x, y) with x, y polynomials in u and x*f + y*g = h, where
    h = gcd(f*D, g*D) / D for a common denominator D.  The two-column
    transform [[x, -g/h], [y, f/h]] then has determinant 1 and entries in
    O_V, so it is unimodular over the Laurent polynomials.
    """
    from . import poly

    K = R.K
    if f.is_zero():
        return g, R.zero(), R.one()
    if g.is_zero():
        return f, R.one(), R.zero()
    D = R.from_poly(poly.mul(K, list(f.den), list(g.den)))
    F = f * D
    G = g * D
    h, s, t = poly.gcdex(K, list(F.num), list(G.num))
    return R.from_poly(h) / D, R.from_poly(s), R.from_poly(t)


def column_reduce_ov(R, M, row=0, cols=None):
    """Clear one row to (gcd, 0, ..., 0) by GL(O_V) column operations.

    Returns (q, W) with W = M*q; the surviving entry sits in the first
    column of ``cols`` and is an O_V-gcd of the original row slice: the
    monic gcd over K[u] of the denominator-cleared entries, divided back
    by the common denominator.
    """
    if cols is None:
        cols = list(range(M.n))
    W = M.copy()
    q = Matrix.identity(R, M.n)
    j0 = cols[0]
    for j in cols[1:]:
        f, g = W[row, j0], W[row, j]
        if g.is_zero():
            continue
        if f.is_zero():
            _col_swap(W, q, j0, j)
            continue
        h, x, y = _ov_gcd_pair(R, f, g)
        # two-column transform [[x, -g/h], [y, f/h]] has determinant 1
        a, b = W.col(j0), W.col(j)
        gh = g / h
        fh = f / h
        for r in range(W.m):
            W[r, j0] = a[r] * x + b[r] * y
            W[r, j] = b[r] * fh - a[r] * gh
        a, b = q.col(j0), q.col(j)
        for r in range(q.m):
            q[r, j0] = a[r] * x + b[r] * y
            q[r, j] = b[r] * fh - a[r] * gh
    return q, W


def ov_triangularize(R, M):
    """Lower-triangularize by GL(O_V) column operations: returns (q, T)."""
    W = M.copy()
    q = Matrix.identity(R, M.n)
    for i in range(min(M.m, M.n)):
        cols = list(range(i, M.n))
        qi, W = column_reduce_ov(R, W, row=i, cols=cols)
        q = q * qi
    return q, W


# -- the 2x2 lemma ------------------------------------------------------------


def diag_2x2(R, a, b, c):
    """Diagonalize [[a, 0], [b, c]] with p in GL_2(O_S), q in GL_2(O_V).

    Follows the two-sided reduction: balance val0(a) = val0(c) with a
    u-power column scaling, subtract the Laurent approximation of b/c,
    then either eliminate with the O_S row operation [[1,0],[-b/a,1]] or
    pivot, which strictly decreases w(a) - w(c).
    """
    if a.is_zero() or c.is_zero():
        raise ZeroPivotError("zero diagonal pivot in 2x2 reduction")
    W = Matrix(R, [[a, R.zero()], [b, c]])
    p = Matrix.identity(R, 2)
    q = Matrix.identity(R, 2)
    _diag_block(R, W, p, q, 0, 1)
    return p, q, W


def _diag_block(R, W, p, q, j, i):
    """Run the 2x2 reduction on rows/columns (j, i) of the full matrix W.

    Requires W[j, i] == 0 and nonzero diagonal entries; the operations are
    accumulated into p (left, O_S) and q (right, O_V).
    """
    u = R.gen()
    guard = 0
    while True:
        guard += 1
        if guard > 10000:
            raise RuntimeError("2x2 reduction failed to terminate")
        a, b, c = W[j, j], W[i, j], W[i, i]
        if b.is_zero():
            return
        alpha = R.val0(a) - R.val0(c)
        if alpha:
            _col_scale(W, q, i, u ** alpha)
            c = W[i, i]
        lam = R.laurent_approximate(b / c)
        if not lam.is_zero():
            _col_addmul(W, q, j, i, -lam)
            b = W[i, j]
        if b.is_zero():
            return
        if R.val_inf(b) >= R.val_inf(a):
            _row_addmul(W, p, i, j, -(b / a))
            return
        if R.val0(b) > R.val0(a):
            _row_addmul(W, p, i, j, R.one())
            b = W[i, j]
        # now val0(b) = val0(a) = val0(c) and val_inf(a) > val_inf(b) > val_inf(c)
        _row_addmul(W, p, j, i, -(a / b))
        _col_swap(W, q, j, i)


# -- certified normal form ----------------------------------------------------


def _try_eliminate(R, W, p, q, j, i):
    """Junk-free partial reduction of the lower entry (i, j), any distance.

    Balances val0 of the two diagonal entries, subtracts the Laurent
    approximation of b/c, and clears b with an O_S row operation when the
    valuations allow it.  All three operations preserve lower-triangular
    shape for arbitrary j < i.  Returns True when the entry was cleared.
    """
    u = R.gen()
    b = W[i, j]
    if b.is_zero():
        return True
    a, c = W[j, j], W[i, i]
    alpha = R.val0(a) - R.val0(c)
    if alpha:
        _col_scale(W, q, i, u ** alpha)
        c = W[i, i]
    lam = R.laurent_approximate(b / c)
    if not lam.is_zero():
        _col_addmul(W, q, j, i, -lam)
        b = W[i, j]
    if b.is_zero():
        return True
    if R.val_inf(b) >= R.val_inf(a):
        _row_addmul(W, p, i, j, -(b / a))
        return True
    return False


def _sweep(R, M, cap=_SWEEP_CAP):
    """Fast path: triangularize once, then clear lower entries in place.

    Far entries are handled by the junk-free partial reduction; entries on
    the first subdiagonal may additionally run the full 2x2 pivot loop,
    which preserves lower-triangular shape exactly when the pair is
    adjacent.  Returns (p, q, W) with p*M*q = W diagonal, or None when the
    pass cap is hit.
    """
    n = M.n
    p = Matrix.identity(R, n)
    q, W = ov_triangularize(R, M)
    for _ in range(cap):
        dirty = False
        progress = False
        for j in range(n - 2, -1, -1):
            for i in range(j + 1, n):
                if W[i, j].is_zero():
                    continue
                dirty = True
                if _try_eliminate(R, W, p, q, j, i):
                    progress = True
                elif i == j + 1:
                    _diag_block(R, W, p, q, j, i)
                    progress = True
        if not dirty:
            return p, q, W
        if not progress:
            # a far entry is stuck: spend one full block plus cleanup
            for j in range(n - 2, -1, -1):
                for i in range(j + 2, n):
                    if not W[i, j].is_zero():
                        _diag_block(R, W, p, q, j, i)
                        q1, W = ov_triangularize(R, p * M * q)
                        q = q * q1
                        break
                else:
                    continue
                break
    return None


def _rref_raw(K, eqs, ncols):
    """Reduced row echelon of a sparse raw-coefficient system.

    ``eqs`` is a list of dicts {column: raw coefficient}.  Plain Gaussian
    elimination over K on raw data, with an integer fast path for prime
    fields.  Returns (dense rows, pivot list of (row, col)).
    """
    p = getattr(K, "p", None)
    dense = [[K.zero] * ncols for _ in range(len(eqs))]
    for r, terms in enumerate(eqs):
        for c, cf in terms.items():
            dense[r][c] = cf
    pivots = []
    r = 0
    nrows = len(dense)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not K.is_zero(dense[i][c]):
                piv = i
                break
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        if p is not None:
            inv = pow(dense[r][c], -1, p)
            dense[r] = [(x * inv) % p for x in dense[r]]
            for i in range(nrows):
                if i != r and dense[i][c]:
                    f = dense[i][c]
                    dense[i] = [(x - f * y) % p
                                for x, y in zip(dense[i], dense[r])]
        else:
            inv = K.inv(dense[r][c])
            dense[r] = [K.mul(x, inv) for x in dense[r]]
            for i in range(nrows):
                if i != r and not K.is_zero(dense[i][c]):
                    f = dense[i][c]
                    dense[i] = [K.sub(x, K.mul(f, y))
                                for x, y in zip(dense[i], dense[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return dense, pivots


def _kernel_basis_raw(K, eqs, ncols):
    """Basis of the kernel of the raw system, as lists of raw values."""
    dense, pivots = _rref_raw(K, eqs, ncols)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [K.zero] * ncols
        v[free] = K.one
        for rr, cc in pivots:
            v[cc] = K.neg(dense[rr][free])
        basis.append(v)
    return basis


def _kernel_vector_raw(K, eqs, ncols):
    """One nonzero kernel vector, or None when the system is injective."""
    dense, pivots = _rref_raw(K, eqs, ncols)
    pivot_cols = {c for _, c in pivots}
    free = next((c for c in range(ncols) if c not in pivot_cols), None)
    if free is None:
        return None
    v = [K.zero] * ncols
    v[free] = K.one
    for rr, cc in pivots:
        v[cc] = K.neg(dense[rr][free])
    return v


def _entry_valuation_bounds(R, M, det):
    """Per-coordinate lower bounds for the valuations of inverse entries.

    val0 of the (j, c) entry of the inverse is at least the bound of the
    (c, j) minor minus val0(det); the minor bound is the sum over rows
    (skipping c) of the row minimum over columns (skipping j).
    """
    n = M.n
    v0 = [[None] * n for _ in range(n)]
    vi = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            e = M[i, j]
            if not e.is_zero():
                v0[i][j] = R.val0(e)
                vi[i][j] = R.val_inf(e)

    def minor_bound(vals, skip_row, skip_col):
        total = 0
        for r in range(n):
            if r == skip_row:
                continue
            best = None
            for c in range(n):
                if c == skip_col or vals[r][c] is None:
                    continue
                if best is None or vals[r][c] < best:
                    best = vals[r][c]
            if best is None:
                return None
            total += best
        return total

    d0, dinf = R.val0(det), R.val_inf(det)
    lo = []
    top = []
    for j in range(n):
        b0 = [minor_bound(v0, c, j) for c in range(n)]
        bi = [minor_bound(vi, c, j) for c in range(n)]
        b0 = [x for x in b0 if x is not None]
        bi = [x for x in bi if x is not None]
        lo.append(min(b0) - d0 if b0 else 0)
        top.append(min(bi) - dinf if bi else 0)
    return lo, top


def _cleared_rows(R, M):
    """Per-row cleared numerators and denominator data, twist-independent.

    Returns a list of (nums, val0(den), deg(den)) per row, where nums are
    polynomial numerators against the common row denominator.  A Laurent
    combination P of the nums gives a row value P/den, which lies in O_S
    at twist k exactly when val0(P) >= val0(den) and the top exponent of
    P is at most deg(den) - k.
    """
    n = M.n
    rows = []
    for i in range(n):
        den = R.one()
        for j in range(n):
            den = den * R.from_poly(list(M[i, j].den))
        nums = [M[i, j] * den for j in range(n)]
        rows.append((nums, R.val0(den), len(den.num) - 1))
    return rows


def _section_at_twist(R, rows, bounds, n, k):
    """A nonzero v over O_V with M*v*(u-1)**k integral over O_S, or None."""
    K = R.K
    lo_b, top_b = bounds
    lo = list(lo_b)
    hi = [-(top_b[j] + k) for j in range(n)]
    unknowns = []  # (coordinate, exponent)
    for j in range(n):
        for m in range(lo[j], hi[j] + 1):
            unknowns.append((j, m))
    if not unknowns:
        return None
    idx = {um: t for t, um in enumerate(unknowns)}
    eqs = []
    for nums, low_ok, dendeg in rows:
        top_ok = dendeg - k
        # forbidden coefficients of sum_j nums_j * v_j
        exps = {}
        for (j, m) in unknowns:
            e = nums[j]
            if e.is_zero():
                continue
            for d, cf in enumerate(e.num):
                if K.is_zero(cf):
                    continue
                ex = d + m
                if ex < low_ok or ex > top_ok:
                    exps.setdefault(ex, {})[idx[(j, m)]] = cf
        for terms in exps.values():
            eqs.append(terms)
    vec = _kernel_vector_raw(K, eqs, len(unknowns))
    if vec is None:
        return None
    v = [R.zero() for _ in range(n)]
    u = R.gen()
    for t, (j, m) in enumerate(unknowns):
        cf = vec[t]
        if not K.is_zero(cf):
            v[j] = v[j] + R.from_base(cf) * u ** m
    if all(x.is_zero() for x in v):
        return None
    return v


def section_space(R, M, k=0):
    """Basis of {v over O_V : M*v*(u-1)**k is integral over O_S}.

    Solved directly as a finite linear system over K: coordinate windows
    come from valuation bounds on the minors of M, and the forbidden
    Laurent coefficients of each row give the equations.  Independent of
    any normal-form certificate.
    """
    n = M.n
    det = M.det()
    if det.is_zero():
        raise SingularMatrixError("matrix is singular")
    if n == 0:
        return []
    bounds = _entry_valuation_bounds(R, M, det)
    rows = _cleared_rows(R, M)
    K = R.K
    lo_b, top_b = bounds
    unknowns = []
    for j in range(n):
        for m in range(lo_b[j], -(top_b[j] + k) + 1):
            unknowns.append((j, m))
    if not unknowns:
        return []
    idx = {um: t for t, um in enumerate(unknowns)}
    eqs = []
    for nums, low_ok, dendeg in rows:
        top_ok = dendeg - k
        exps = {}
        for (j, m) in unknowns:
            e = nums[j]
            if e.is_zero():
                continue
            for d, cf in enumerate(e.num):
                if K.is_zero(cf):
                    continue
                ex = d + m
                if ex < low_ok or ex > top_ok:
                    exps.setdefault(ex, {})[idx[(j, m)]] = cf
        for terms in exps.values():
            eqs.append(terms)
    basis = _kernel_basis_raw(K, eqs, len(unknowns))
    u = R.gen()
    out = []
    for vec in basis:
        v = [R.zero() for _ in range(n)]
        for t, (j, m) in enumerate(unknowns):
            cf = vec[t]
            if not K.is_zero(cf):
                v[j] = v[j] + R.from_base(cf) * u ** m
        out.append(v)
    return out


def _strip_ov_content(R, v):
    """Divide a vector over O_V by the gcd of its coprime-to-u parts."""
    from . import poly

    K = R.K
    g = []
    for x in v:
        if x.is_zero():
            continue
        m = poly.x_multiplicity(K, list(x.num))
        g = poly.gcd(K, g, list(x.num)[m:]) if g else poly.monic(
            K, list(x.num)[m:])
    if not g or poly.deg(g) == 0:
        return v
    c = R.from_poly(g)
    return [x / c for x in v]


def _os_gcd_pair(R, f, g):
    """O_S-gcd with cofactors: (d, x, y) with x*f + y*g = d.

    The gcd is the two-valuation generator
    (u/(u-1))**min(val0) * (1/(u-1))**min(val_inf).
    """
    if f.is_zero():
        return g, R.zero(), R.one()
    if g.is_zero():
        return f, R.one(), R.zero()
    u = R.gen()
    um1 = R.u_minus_1()
    t0 = u / um1
    tinf = um1.inv()
    a = min(R.val0(f), R.val0(g))
    b = min(R.val_inf(f), R.val_inf(g))
    d = t0 ** a * tinf ** b
    f1, g1 = f / d, g / d
    if R.is_unit_os(f1):
        return d, f1.inv(), R.zero()
    if R.is_unit_os(g1):
        return d, R.zero(), g1.inv()
    # content-one pair: one entry has val0 = 0, the other val_inf = 0
    c = f1 + g1
    if not R.is_unit_os(c):
        raise RuntimeError("O_S gcd pair normalization failed")
    ci = c.inv()
    return d, ci, ci


def _ops_to_e1(R, vec, gcd_pair, unit_test):
    """Row operations carrying vec to e1, as a list of 2x2 blocks.

    Each op ('pair', j, x, y, gd, fd) acts on rows (0, j) as the
    determinant-one block [[x, y], [-gd, fd]]; the trailing ('scale', c)
    rescales row 0 by the unit c.  ``gcd_pair`` must return (d, x, y) with
    x*a + y*b = d; the final pivot must pass ``unit_test``.
    """
    n = len(vec)
    v = list(vec)
    ops = []
    for j in range(1, n):
        f, g = v[0], v[j]
        if g.is_zero():
            continue
        if f.is_zero():
            # determinant-one swap block [[0, 1], [-1, 0]]
            ops.append(("pair", j, R.zero(), R.one(), R.one(), R.zero()))
            v[0], v[j] = g, R.zero()
            continue
        d, x, y = gcd_pair(R, f, g)
        ops.append(("pair", j, x, y, g / d, f / d))
        v[0], v[j] = d, R.zero()
    if not unit_test(v[0]):
        raise RuntimeError("vector content is not a unit; cannot complete")
    ops.append(("scale", v[0].inv()))
    return ops


def _apply_ops_rows(R, ops, X):
    """Left-multiply X in place by the transform encoded in ops."""
    for op in ops:
        if op[0] == "pair":
            _, j, x, y, gd, fd = op
            for s in range(X.n):
                a, b = X[0, s], X[j, s]
                X[0, s] = x * a + y * b
                X[j, s] = fd * b - gd * a
        else:
            c = op[1]
            for s in range(X.n):
                X[0, s] = X[0, s] * c


def _apply_inverse_ops_cols(R, ops, X):
    """Right-multiply X in place by the inverse of the ops transform."""
    for op in ops:
        if op[0] == "pair":
            # block inverse of [[x, y], [-gd, fd]] is [[fd, -y], [gd, x]]
            _, j, x, y, gd, fd = op
            for r in range(X.m):
                a, b = X[r, 0], X[r, j]
                X[r, 0] = a * fd + b * gd
                X[r, j] = b * x - a * y
        else:
            c = op[1].inv()
            for r in range(X.m):
                X[r, 0] = X[r, 0] * c


def _peel(R, M):
    """Terminating normal form by maximal-twist section peeling.

    Returns (p, q, W, exponents) with p*M*q = W = diag((u-1)**exponents).
    """
    n = M.n
    um1 = R.u_minus_1()
    if n == 1:
        f = M[0, 0]
        if f.is_zero():
            raise SingularMatrixError("matrix is singular")
        p_unit, k, a = R.canonical_factor(f)
        p = Matrix(R, [[p_unit.inv()]])
        q = Matrix(R, [[R.gen() ** (-a)]])
        return p, q, p * M * q, [k]
    det = M.det()
    if det.is_zero():
        raise SingularMatrixError("matrix is singular")
    bounds = _entry_valuation_bounds(R, M, det)
    rows = _cleared_rows(R, M)
    # above bound_hi every unknown window is empty, so no section exists
    bound_hi = max(-(bounds[1][j] + bounds[0][j]) for j in range(n))
    degree = _w(R, det)
    bound_lo = -(-degree // n)  # ceil(degree / n)
    v = None
    for k in range(bound_hi, bound_lo - 1, -1):
        v = _section_at_twist(R, rows, bounds, n, k)
        if v is not None:
            break
    if v is None:
        raise RuntimeError("no section found within proven bounds")
    v = _strip_ov_content(R, v)
    w = [R.zero() for _ in range(n)]
    f = um1 ** k
    for i in range(n):
        acc = R.zero()
        for j in range(n):
            acc = acc + M[i, j] * v[j]
        w[i] = acc * f
    ops_v = _ops_to_e1(R, v, _ov_gcd_pair, lambda x: R.is_unit_ov(x))
    ops_w = _ops_to_e1(R, w, _os_gcd_pair, lambda x: R.is_unit_os(x))
    Q1 = Matrix.identity(R, n)
    _apply_inverse_ops_cols(R, ops_v, Q1)
    P1 = Matrix.identity(R, n)
    _apply_ops_rows(R, ops_w, P1)
    W1 = M.copy()
    _apply_inverse_ops_cols(R, ops_v, W1)
    _apply_ops_rows(R, ops_w, W1)
    # W1 = [[(u-1)^{-k}, r], [0, M']]
    m1 = -k
    if not (W1[0, 0] - um1 ** m1).is_zero() or any(
            not W1[i, 0].is_zero() for i in range(1, n)):
        raise RuntimeError("peeled column has unexpected shape")
    sub = W1.submatrix(range(1, n), range(1, n))
    p2, q2, _, exps2 = _peel(R, sub)
    P = Matrix.block_diag(R, [Matrix.identity(R, 1), p2]) * P1
    Q = Q1 * Matrix.block_diag(R, [Matrix.identity(R, 1), q2])
    # assemble W = P*M*Q without a full reproduct: only the residual row
    # r*q2 is new
    res = [W1[0, j] for j in range(1, n)]
    res = [sum((res[t] * q2[t, j] for t in range(n - 1)), R.zero())
           for j in range(n - 1)]
    W = Matrix.zeros(R, n, n)
    W[0, 0] = um1 ** m1
    for j in range(1, n):
        W[0, j] = res[j - 1]
        W[j, j] = um1 ** exps2[j - 1]
    # clear the residual first row against the diagonal below
    for j in range(1, n):
        e = W[0, j]
        if e.is_zero():
            continue
        mj = exps2[j - 1]
        delta = mj - m1
        if delta < -1:
            raise RuntimeError("quotient twist exceeds peeled twist")
        h = e / um1 ** m1
        lam = R.laurent_approximate(h)
        rho = h - lam
        # column operation over O_V and row operation over O_S
        if not lam.is_zero():
            _col_addmul(W, Q, j, 0, -lam)
        if not rho.is_zero():
            sigma = rho * um1 ** (-delta)
            _row_addmul(W, P, 0, j, -sigma)
    return P, Q, W, [m1] + exps2


def _normalize_diagonal(R, p, q, W):
    """Turn a diagonal W into (u-1)-powers and sort exponents descending."""
    n = W.n
    exps = []
    for i in range(n):
        unit, k, a = R.canonical_factor(W[i, i])
        _row_scale(W, p, i, unit.inv())
        _col_scale(W, q, i, R.gen() ** (-a))
        exps.append(k)
    order = sorted(range(n), key=lambda i: -exps[i])
    p2 = Matrix(R, [p.rows[old] for old in order])
    q2 = Matrix(R, [[q.rows[r][old] for old in order] for r in range(n)])
    return NormalFormCertificate(p2, q2, [exps[i] for i in order])


def grothendieck_normal_form(R, M):
    """Certified reduction of an invertible matrix over K(u).

    Returns a NormalFormCertificate (p, q, exponents) with
    p * M * q = diag((u-1)**k_i), exponents sorted descending.

    Raises SingularMatrixError on singular input.
    """
    if M.m != M.n:
        raise ValueError("matrix must be square")
    if M.det().is_zero():
        raise SingularMatrixError("matrix is singular")
    res = _sweep(R, M) if M.n <= 2 else None
    if res is None:
        p, q, W, _ = _peel(R, M)
    else:
        p, q, W = res
    cert = _normalize_diagonal(R, p, q, W)
    return cert


def verify_certificate(R, M, cert):
    """Exact check of all certificate invariants."""
    p, q, exps = cert.p, cert.q, cert.exponents
    n = M.n
    if p.m != n or q.m != n or len(exps) != n:
        return False
    for i in range(n):
        for j in range(n):
            if not R.in_os(p[i, j]):
                return False
            if not R.in_ov(q[i, j]):
                return False
    detp = p.det()
    if detp.is_zero() or not R.is_unit_os(detp):
        return False
    detq = q.det()
    if detq.is_zero() or not R.is_unit_ov(detq):
        return False
    try:
        pinv = p.inverse()
        qinv = q.inverse()
    except SingularMatrixError:
        return False
    for i in range(n):
        for j in range(n):
            if not R.in_os(pinv[i, j]):
                return False
            if not R.in_ov(qinv[i, j]):
                return False
    W = p * M * q
    um1 = R.u_minus_1()
    for i in range(n):
        for j in range(n):
            want = um1 ** exps[i] if i == j else R.zero()
            if not (W[i, j] - want).is_zero():
                return False
    return True
