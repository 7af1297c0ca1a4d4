"""Shared random generators for the test suite.

Random GL(O_S) elements are products of elementary matrices with O_S
entries and diagonal O_S-unit scalings, so their inverses stay over O_S;
GL(O_V) elements are built the same way from Laurent polynomials and
u-power unit scalings.
"""

import random

from conicforms.basefields import GF, QQ
from conicforms.linalg import Matrix
from conicforms.ratfunc import RationalFunctionField


def rand_os(R, rng, deg=2, height=5):
    """Random element of O_S: both valuations nonnegative."""
    K = R.K
    while True:
        d = [K.rand(rng, height) for _ in range(deg + 1)]
        if d and not K.is_zero(d[0]) and not K.is_zero(d[-1]):
            break
    nd = rng.randint(0, deg)
    n = [K.rand(rng, height) for _ in range(nd + 1)]
    f = R.from_pair(n, d)
    return f


def rand_os_unit(R, rng, deg=2, height=5):
    """Random unit of O_S: both valuations zero."""
    K = R.K
    while True:
        d = [K.rand(rng, height) for _ in range(deg + 1)]
        n = [K.rand(rng, height) for _ in range(deg + 1)]
        if (d and n and not K.is_zero(d[0]) and not K.is_zero(d[-1])
                and not K.is_zero(n[0]) and not K.is_zero(n[-1])
                and len(n) == len(d)):
            f = R.from_pair(n, d)
            if R.is_unit_os(f):
                return f


def rand_ov(R, rng, deg=2, height=5):
    """Random Laurent polynomial."""
    K = R.K
    cs = [K.rand(rng, height) for _ in range(deg + 1)]
    shift = rng.randint(-deg, 0)
    u = R.gen()
    return R.from_poly(cs) * u ** shift


def rand_ov_unit(R, rng, height=5):
    K = R.K
    while True:
        c = K.rand(rng, height)
        if not K.is_zero(c):
            return R.from_base(c) * R.gen() ** rng.randint(-2, 2)


def rand_gl_os(R, n, rng, factors=3):
    """Random element of GL_n(O_S)."""
    m = Matrix.identity(R, n)
    for _ in range(factors):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            d = Matrix.identity(R, n)
            d[i, i] = rand_os_unit(R, rng)
            m = m * d
        else:
            e = Matrix.identity(R, n)
            e[i, j] = rand_os(R, rng, deg=1, height=3)
            m = m * e
    return m


def rand_gl_ov(R, n, rng, factors=3):
    """Random element of GL_n(O_V)."""
    m = Matrix.identity(R, n)
    for _ in range(factors):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            d = Matrix.identity(R, n)
            d[i, i] = rand_ov_unit(R, rng)
            m = m * d
        else:
            e = Matrix.identity(R, n)
            e[i, j] = rand_ov(R, rng, deg=1, height=3)
            m = m * e
    return m


def rand_invertible(R, n, rng, deg=3, height=5):
    """Random invertible matrix over K(u) with entry degrees <= deg."""
    while True:
        m = Matrix(R, [[R.rand(rng, deg=deg, height=height)
                        for _ in range(n)] for _ in range(n)])
        if not m.det().is_zero():
            return m


def field_gf7u():
    return RationalFunctionField(GF(7), "u")


def field_qqu():
    return RationalFunctionField(QQ, "u")


def seeded(seed):
    return random.Random(seed)
