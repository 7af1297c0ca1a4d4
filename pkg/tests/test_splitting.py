"""Normal form over K(u): column reduction, the 2x2 step, certificates."""

import pytest

from conicforms.linalg import Matrix, SingularMatrixError
from conicforms.splitting import (
    NormalFormCertificate,
    ZeroPivotError,
    column_reduce_ov,
    diag_2x2,
    grothendieck_normal_form,
    ov_triangularize,
    verify_certificate,
)

from helpers import (
    field_gf7u,
    field_qqu,
    rand_gl_os,
    rand_gl_ov,
    rand_invertible,
    seeded,
)


def test_column_reduce_identity():
    R = field_qqu()
    M = Matrix.identity(R, 3)
    q, W = column_reduce_ov(R, M)
    assert W == M and q == M


def test_column_reduce_u_u2_row():
    R = field_qqu()
    u = R.gen()
    M = Matrix(R, [[u, u * u], [R.zero(), R.one()]])
    q, W = column_reduce_ov(R, M)
    assert W[0, 0] == u and W[0, 1].is_zero()
    assert (M * q) == W
    assert not q.det().is_zero()


def test_column_reduce_repeated_entry():
    R = field_qqu()
    um1 = R.u_minus_1()
    M = Matrix(R, [[um1, um1], [R.zero(), R.one()]])
    q, W = column_reduce_ov(R, M)
    assert W[0, 0] == um1 and W[0, 1].is_zero()
    assert (M * q) == W


def test_column_reduce_rational_entries():
    R = field_qqu()
    rng = seeded(17)
    for _ in range(20):
        M = rand_invertible(R, 3, rng, deg=2, height=4)
        q, W = column_reduce_ov(R, M)
        assert (M * q) == W
        assert W[0, 1].is_zero() and W[0, 2].is_zero()
        for i in range(3):
            for j in range(3):
                assert R.in_ov(q[i, j])
        assert R.is_unit_ov(q.det())


def test_ov_triangularize():
    R = field_gf7u()
    rng = seeded(3)
    for _ in range(20):
        M = rand_invertible(R, 3, rng, deg=2, height=6)
        q, T = ov_triangularize(R, M)
        assert (M * q) == T
        for i in range(3):
            for j in range(i + 1, 3):
                assert T[i, j].is_zero()


def test_diag_2x2_zero_b():
    R = field_qqu()
    a, c = R.gen(), R.one()
    p, q, W = diag_2x2(R, a, R.zero(), c)
    assert p == Matrix.identity(R, 2)
    assert q == Matrix.identity(R, 2)


def test_diag_2x2_os_elimination():
    # a = c = 1 and val_inf(b) >= 0: a single O_S row operation clears b
    R = field_qqu()
    one = R.one()
    b = (R.gen() + one).inv()  # val0 = 0, val_inf = 1
    p, q, W = diag_2x2(R, one, b, one)
    assert q == Matrix.identity(R, 2)
    assert p[1, 0] == -b
    assert W[1, 0].is_zero()


def test_diag_2x2_pivot_case():
    R = field_qqu()
    um1 = R.u_minus_1()
    a, b, c = um1, R.one(), um1.inv()
    p, q, W = diag_2x2(R, a, b, c)
    M = Matrix(R, [[a, R.zero()], [b, c]])
    assert (p * M * q) == W
    assert W[0, 1].is_zero() and W[1, 0].is_zero()
    for i in range(2):
        for j in range(2):
            assert R.in_os(p[i, j])
            assert R.in_ov(q[i, j])
    assert R.is_unit_os(p.det())
    assert R.is_unit_ov(q.det())


def test_diag_2x2_zero_pivot_rejected():
    R = field_qqu()
    with pytest.raises(ZeroPivotError):
        diag_2x2(R, R.zero(), R.one(), R.one())


def test_normal_form_identity():
    R = field_qqu()
    cert = grothendieck_normal_form(R, Matrix.identity(R, 3))
    assert cert.exponents == [0, 0, 0]
    assert verify_certificate(R, Matrix.identity(R, 3), cert)


def test_normal_form_diagonal_example():
    R = field_qqu()
    um1 = R.u_minus_1()
    M = Matrix(R, [[um1, R.zero()], [R.zero(), um1 ** -2]])
    cert = grothendieck_normal_form(R, M)
    assert cert.exponents == [1, -2]
    assert verify_certificate(R, M, cert)


def test_normal_form_singular_rejected():
    R = field_qqu()
    M = Matrix(R, [[R.one(), R.one()], [R.one(), R.one()]])
    with pytest.raises(SingularMatrixError):
        grothendieck_normal_form(R, M)


def test_normal_form_1x1_matches_canonical_factor():
    R = field_qqu()
    rng = seeded(21)
    for _ in range(25):
        f = R.rand(rng, deg=3, height=6, nonzero=True)
        M = Matrix(R, [[f]])
        cert = grothendieck_normal_form(R, M)
        _, k, _ = R.canonical_factor(f)
        assert cert.exponents == [k]
        assert verify_certificate(R, M, cert)


def test_normal_form_random_certified():
    for F, seed, rounds in ((field_gf7u(), 101, 40), (field_qqu(), 102, 15)):
        rng = seeded(seed)
        for _ in range(rounds):
            n = rng.randint(1, 4)
            M = rand_invertible(F, n, rng, deg=3, height=4)
            cert = grothendieck_normal_form(F, M)
            assert verify_certificate(F, M, cert)
            assert cert.exponents == sorted(cert.exponents, reverse=True)


def test_normal_form_sum_rule():
    # the exponent sum is minus the combined valuation of the determinant
    R = field_gf7u()
    rng = seeded(5)
    for _ in range(25):
        n = rng.randint(1, 4)
        M = rand_invertible(R, n, rng, deg=3, height=6)
        cert = grothendieck_normal_form(R, M)
        d = M.det()
        assert sum(cert.exponents) == -(R.val0(d) + R.val_inf(d))


def test_normal_form_invariance_under_unit_groups():
    R = field_gf7u()
    rng = seeded(8)
    for _ in range(10):
        n = rng.randint(2, 3)
        M = rand_invertible(R, n, rng, deg=2, height=6)
        exps = grothendieck_normal_form(R, M).exponents
        for _ in range(5):
            P = rand_gl_os(R, n, rng)
            Q = rand_gl_ov(R, n, rng)
            M2 = P * M * Q
            assert grothendieck_normal_form(R, M2).exponents == exps


def test_verify_rejects_scaled_p():
    R = field_qqu()
    M = Matrix.identity(R, 2)
    cert = grothendieck_normal_form(R, M)
    u = R.gen()
    bad = NormalFormCertificate(cert.p * u, cert.q, cert.exponents)
    assert not verify_certificate(R, M, bad)
