import pytest

from nablasym import combinat as cb
from nablasym.exactalg import ONE_QT, QTRat, WindowError, q, qt, t, z_extract
from nablasym.pleth import EPS, X, Z, compose, const, h_of_rank1, omega_series, plethysm, plethysm_sym
from nablasym.symfun import BASES, SymFun, basis_inject, e, h, lincomb, m, omega, p, s


def test_identity_alphabet():
    for n in range(0, 6):
        for basis in BASES:
            for lam in cb.enumerate_partitions(n):
                f = basis_inject(basis, lam)
                assert plethysm_sym(f, X) == f


def test_minus_eps_x_is_omega():
    for n in range(0, 7):
        for lam in cb.enumerate_partitions(n):
            f = s(lam)
            assert plethysm_sym(f, -(X * EPS)) == omega(f)


def test_constant_shift():
    out = plethysm(p(2), X - const(ONE_QT - ONE_QT / q, -1))
    assert z_extract(out, 0) == p(2)
    assert z_extract(out, -2) == SymFun.scalar(QTRat(1, q ** 2) - 1)
    assert not z_extract(out, -1)


def test_m2j_as_composition():
    for j in range(0, 5):
        assert m((2,) * j) == compose(e(j), p(2)) == compose(p(2), e(j))


def test_omega_series():
    om = omega_series(Z * X, nmax=5)
    for n in range(1, 6):
        assert z_extract(om, n) == h(n)
    with pytest.raises(WindowError):
        z_extract(om, 7)
    prod = om.mul(omega_series(-(Z * X), nmax=5), hi=5)
    assert z_extract(prod, 0) == SymFun.scalar(1)
    for n in range(1, 6):
        assert not z_extract(prod, n)


def test_h_addition_with_constant_alphabet():
    y = const(q + t)
    for n in range(0, 6):
        lhs = plethysm_sym(h(n), X + y)
        rhs = lincomb((1, h(i) * plethysm_sym(h(n - i), y)) for i in range(n + 1))
        assert lhs == rhs


def test_h_of_rank1():
    assert h_of_rank1(0, q, t)[0] == qt(1)
    coef, zexp = h_of_rank1(2, q, t)
    assert coef == qt((1 - q) * t ** 2) and zexp == 0
    coef, zexp = h_of_rank1(3, q ** 2, 1, -3)
    assert coef == qt(1 - q ** 2) and zexp == -9
