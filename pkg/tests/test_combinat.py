from math import factorial

import pytest
from hypothesis import given, strategies as st

from nablasym import combinat as cb
from nablasym.exactalg import q, t, ONE


def test_conjugate():
    assert cb.conjugate((1, 1, 1)) == (3,)
    assert cb.conjugate((3, 1)) == (2, 1, 1)
    assert cb.conjugate((2, 2)) == (2, 2)


def test_cell_stats():
    (c,) = cb.cell_stats((1,))
    assert (c.arm, c.leg, c.coarm, c.coleg) == (0, 0, 0, 0)
    corner = next(c for c in cb.cell_stats((2, 1)) if (c.row, c.col) == (0, 0))
    assert (corner.arm, corner.leg, corner.coarm, corner.coleg) == (1, 1, 0, 0)
    first = next(c for c in cb.cell_stats((3,)) if (c.row, c.col) == (0, 0))
    assert (first.arm, first.leg) == (2, 0)


def test_scalars():
    assert cb.Tmu((1,)) == ONE
    assert cb.wmu((1,)) == (1 - t) * (1 - q)
    assert cb.Tmu((2, 1)) == q * t
    assert cb.zlambda((2, 1)) == 2


def test_enumeration():
    assert cb.enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert cb.enumerate_partitions(0) == [()]
    assert list(cb.enumerate_compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    for n in range(1, 13):
        assert len(list(cb.enumerate_compositions(n))) == 2 ** (n - 1)


def test_syt_descents():
    assert cb.syt_descents((4,)) == {frozenset(): 1}
    assert cb.syt_descents((1, 1, 1)) == {frozenset({1, 2}): 1}
    assert cb.syt_descents((2, 1)) == {frozenset({1}): 1, frozenset({2}): 1}


def _brute_character(lam, mu):
    # Frobenius: coefficient of x^(lam + delta) in p_mu * Vandermonde
    import sympy
    n = sum(lam)
    xs = sympy.symbols(f"x0:{n}")
    p = sympy.Integer(1)
    for k in mu:
        p *= sum(x ** k for x in xs)
    delta = sympy.prod(xs[i] - xs[j] for i in range(n) for j in range(i + 1, n))
    poly = sympy.Poly(sympy.expand(p * delta), *xs)
    ell = list(lam) + [0] * (n - len(lam))
    mono = tuple(ell[i] + n - 1 - i for i in range(n))
    return poly.coeff_monomial(mono)


def test_mn_character_examples():
    assert cb.mn_character((2, 1), (3,)) == -1
    for n in range(1, 6):
        for mu in cb.enumerate_partitions(n):
            assert cb.mn_character((n,), mu) == 1
            assert cb.mn_character((1,) * n, mu) == cb.sign_eps(mu)


@pytest.mark.parametrize("n", [3, 4])
def test_mn_character_frobenius_oracle(n):
    for lam in cb.enumerate_partitions(n):
        for mu in cb.enumerate_partitions(n):
            assert cb.mn_character(lam, mu) == _brute_character(lam, mu)


def test_column_orthogonality():
    for n in range(1, 7):
        parts = cb.enumerate_partitions(n)
        for mu in parts:
            assert sum(cb.mn_character(lam, mu) ** 2 for lam in parts) == cb.zlambda(mu)
        assert sum(cb.count_syt(lam) ** 2 for lam in parts) == factorial(n)


@given(st.permutations(list(range(1, 7))))
def test_inverse_perm(sigma):
    inv = cb.inverse_perm(sigma)
    assert all(inv[sigma[i] - 1] == i + 1 for i in range(6))


def test_binom_pascal():
    for n in range(12):
        for k in range(n + 1):
            assert cb.binom(n, k) == factorial(n) // (factorial(k) * factorial(n - k))
    assert cb.binom(3, 5) == 0


def test_wmu_factors_product():
    for lam in cb.enumerate_partitions(4):
        prod = ONE
        for sign, i, j in cb.wmu_factors(lam):
            prod = prod * (q ** i - t ** j) * sign
        assert prod == cb.wmu(lam)


def test_multiset_helpers():
    lam = (3, 2, 2, 1)
    subs = list(cb.sub_multisets(lam))
    assert len(subs) == len(set(subs)) == 2 * 3 * 2
    for a in subs:
        assert cb.union(a, cb.multiset_diff(lam, a)) == lam
