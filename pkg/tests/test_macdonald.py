import pytest

from nablasym import combinat as cb
from nablasym.exactalg import q, qt, t
from nablasym.macdonald import (check_orthogonality, htilde, kostka_column, nabla, nabla_matrix,
                                nabla_positivity_report)
from nablasym.symfun import e, m, p, s, star


def test_small_htilde():
    assert htilde((1,)) == s((1,))
    assert htilde((2,)) == s((2,)) + s((1, 1)) * q
    assert htilde((1, 1)) == s((2,)) + s((1, 1)) * t


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_orthogonality(n):
    assert check_orthogonality(n) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_at_one_counts_syt(n):
    for mu in cb.enumerate_partitions(n):
        for lam, k in kostka_column(mu).items():
            assert k.evaluate(q=1, t=1) == cb.count_syt(lam)


def test_kostka_symmetry_under_conjugation():
    for mu in cb.enumerate_partitions(4):
        a, b = kostka_column(mu), kostka_column(cb.conjugate(mu))
        for lam in a:
            assert a[lam].swap() == b[lam]


def test_nabla_eigen():
    for n in range(1, 5):
        for mu in cb.enumerate_partitions(n):
            H = htilde(mu)
            assert nabla(H) == H * cb.Tmu(mu)


def test_nabla_small():
    assert nabla(e(1)) == s((1,))
    assert nabla(e(2)) == s((2,)) + s((1, 1)) * (q + t)


def test_nabla_matrix_integral_for_en_columns():
    M = nabla_matrix(4)
    assert all(v.den == qt(1).den for v in M[(1, 1, 1, 1)].values())


def test_positivity_report():
    rep = nabla_positivity_report(m((1, 1)))
    assert rep["verdict"]
    coeffs = {r["partition"]: r["coeff"] for r in rep["rows"]}
    assert coeffs == {(2,): qt(1), (1, 1): qt(q + t)}
    assert nabla_positivity_report(m((2,)), -1)["verdict"]
    assert nabla_positivity_report(m((2, 2)), 1)["verdict"]
    assert not nabla_positivity_report(m((2,)), 1)["verdict"]
