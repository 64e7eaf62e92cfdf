"""Creation operators C_a, their Hall and star adjoints, and pairing formulas."""

from __future__ import annotations

from functools import lru_cache

from . import combinat as cb
from .exactalg import ONE, ONE_QT, QTRat, ZSeries, q, qt, qt_sum, t, z_extract
from .pleth import EPS, X, Z, const, omega_series, plethysm
from .symfun import SymFun, basis_inject, get_trunc, hall, lincomb, one

M = (ONE - q) * (ONE - t)


def _prefactor(a):
    """(-1/q)^(a-1)."""
    return (QTRat(-1) / q) ** (a - 1) if a != 1 else ONE_QT


def _extract(F, omega, k):
    """Coefficient of z^k in F * omega, zero when k is below a closed window."""
    prod = F.mul(omega, lo=k, hi=k)
    if k < prod.lo and prod.closed_below:
        prod = prod.widen(lo=k)
    if k > prod.hi and prod.closed_above:
        prod = prod.widen(hi=k)
    return z_extract(prod, k)


def _zero_or(v):
    return v if isinstance(v, SymFun) else SymFun._of({})


@lru_cache(maxsize=None)
def _c_apply_p(a, lam):
    d = sum(lam)
    if d + a < 0:
        return SymFun._of({})
    F = plethysm(basis_inject("p", lam), X - const(ONE_QT - ONE_QT / q, -1))
    omega = omega_series(Z * X, nmax=max(d + a, 0))
    return _zero_or(_extract(F, omega, a)).scale(_prefactor(a))


def c_apply(a, f):
    """C_a f = (-1/q)^(a-1) f[X - (1-1/q)/z] Omega[zX] at z^a."""
    a = int(a)
    if f.degree() + a > get_trunc():
        from .symfun import DegreeOverflow
        raise DegreeOverflow(f"C_{a} of a degree-{f.degree()} function exceeds truncation {get_trunc()}")
    return lincomb((c, _c_apply_p(a, lam)) for lam, c in f.terms.items())


@lru_cache(maxsize=None)
def _c_word(word):
    out = one()
    for a in reversed(word):
        out = c_apply(a, out)
    return out


def c_word(word):
    """C_{a_1} ... C_{a_l}(1)."""
    word = tuple(int(a) for a in word)
    if sum(word) > get_trunc():
        from .symfun import DegreeOverflow
        raise DegreeOverflow(f"word {list(word)} exceeds truncation {get_trunc()}")
    return _c_word(word)


@lru_cache(maxsize=None)
def _c_vee_p(a, lam):
    d = sum(lam)
    if d - a < 0:
        return SymFun._of({})
    F = plethysm(basis_inject("p", lam), X + const(1, -1))
    omega = omega_series(Z * X * ((ONE_QT - q) / q), nmax=d - a)
    return _zero_or(_extract(F, omega, -a)).scale(_prefactor(a))


def c_vee(a, f):
    """Hall adjoint of C_a: (-1/q)^(a-1) f[X + 1/z] Omega[(1-q)zX/q] at z^(-a)."""
    return lincomb((c, _c_vee_p(int(a), lam)) for lam, c in f.terms.items())


def c_vee_remark(a, f):
    """The same operator written with z in place of 1/z: f[X+z] Omega[(1-q)X/(qz)] at z^a."""
    a = int(a)
    out = []
    for lam, c in f.terms.items():
        d = sum(lam)
        if d - a < 0:
            continue
        F = plethysm(basis_inject("p", lam), X + Z)
        omega = omega_series(X * ((ONE_QT - q) / q) / Z, nmax=d - a)
        out.append((c, _zero_or(_extract(F, omega, a)).scale(_prefactor(a))))
    return lincomb(out)


@lru_cache(maxsize=None)
def _c_star_p(a, lam):
    d = sum(lam)
    if d - a < 0:
        return SymFun._of({})
    F = plethysm(basis_inject("p", lam), X - const(M, -1) * EPS)
    omega = omega_series(Z * X * EPS * (QTRat(-1) / (q * (ONE - t))), nmax=d - a)
    return _zero_or(_extract(F, omega, -a)).scale(_prefactor(a))


def c_star(a, f):
    """Star adjoint of C_a: (-1/q)^(a-1) f[X - eps M/z] Omega[-eps zX/(q(1-t))] at z^(-a)."""
    return lincomb((c, _c_star_p(int(a), lam)) for lam, c in f.terms.items())


def star_dual(g):
    """g[-eps X / M]; pairs as <f, g> = <f, g[-eps X/M]>_*."""
    from .pleth import plethysm_sym
    return plethysm_sym(g, X * EPS * (QTRat(-1) / M))


# -- pairing formulas ----------------------------------------------------------


def _h_poly_series(i):
    """H_i(z) = sum_{j<=i} h_j z^j, a polynomial in z."""
    return ZSeries({j: basis_inject("h", (j,) if j else ()) for j in range(i + 1)}, 0, i, True, True)


def camh_pairing(a, mu, lam):
    """<C_a m_mu, h_lam> from the H_i(z) product formula."""
    mu = cb.as_partition(mu)
    lam = cb.as_partition(lam)
    if sum(lam) != sum(mu) + a:
        raise ValueError("need |lam| = |mu| + a")
    nmax = sum(mu)
    series = ZSeries({0: one()}, 0, 0, True, True)
    for i in lam:
        series = series.mul(_h_poly_series(i), hi=nmax)
    series = series.shift(-sum(lam))
    zq = omega_series(Z * X / q, nmax=nmax)
    H = omega_series(Z * X, nmax=nmax)
    Hinv = H.inverse()
    series = series.mul(zq).mul(Hinv, hi=-a)
    G = z_extract(series, -a)
    if not isinstance(G, SymFun):
        G = SymFun._of({})
    return _prefactor(a) * hall(basis_inject("m", mu), G)


def cvee_p_pairing(a, lam, mu):
    """<C_a^vee p_lam, p_mu> from the power-sum sum over alpha with p_alpha p_rho = p_mu."""
    lam = cb.as_partition(lam)
    mu = cb.as_partition(mu)
    if sum(lam) != sum(mu) + a:
        raise ValueError("need |lam| = |mu| + a")
    ml = cb.multiplicities(lam)
    mm = cb.multiplicities(mu)
    terms = []
    for alpha in cb.sub_multisets(mu):
        ma = cb.multiplicities(alpha)
        if any(ml.get(k, 0) < v for k, v in ma.items()):
            continue
        rho = cb.multiset_diff(mu, alpha)
        coef = cb.zlambda(alpha)
        for k, v in ma.items():
            coef *= cb.binom(ml[k], v) * cb.binom(mm[k], v)
        val = qt(coef)
        for r in rho:
            val = val * ((ONE_QT - q ** r) / q ** r)
        terms.append(val)
    return _prefactor(a) * qt_sum(terms)


def specialize_q1(f):
    """f at q = 1, with removable singularities cancelled."""
    return f.specialize(q=1)


def main_pairing_expected(k, l, lam):
    """The closed-form value of the <., h_lam> table in the two-column recursion."""
    n = 2 * k + l
    if lam == (2,) * k + (1,) * l:
        return qt((-1) ** k)
    if lam == (1,) * n:
        return qt(-cb.binom(k + l, k))
    return qt(0)


__all__ = ["c_apply", "c_word", "c_vee", "c_vee_remark", "c_star", "star_dual",
           "camh_pairing", "cvee_p_pairing", "specialize_q1", "M"]
