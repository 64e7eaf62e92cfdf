"""Modified Macdonald polynomials and the nabla operator.

H~_mu is built from the filling formula: sum over bijective fillings of the
diagram of q^inv t^maj F_{iDes}, then converted to Schur functions with
fund_solve.  Nabla acts on Schur functions through a per-degree matrix; each
column is the star-projection onto the H~ basis, put over one common
denominator (the lcm of the w_mu, assembled from cyclotomic factors) so the
sum collapses to a single exact division.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from . import combinat as cb
from .exactalg import ONE, KronLayout, QTPoly, QTRat, qt, qt_is_nonneg_polynomial, qt_is_polynomial, qt_sum
from .kernels import hhl_histogram
from .symfun import FundVector, SymFun, basis_extract, from_basis, fund_solve, star_weight, _check

_lock = threading.Lock()


@lru_cache(maxsize=None)
def kostka_column(mu):
    """{lam: QTPoly} with H~_mu = sum K~_{lam,mu} s_lam."""
    mu = cb.as_partition(mu)
    n = sum(mu)
    if n == 0:
        return {(): ONE}
    acc = {}
    for (inv, maj, mask), cnt in hhl_histogram(mu).items():
        S = frozenset(i + 1 for i in range(n - 1) if mask >> i & 1)
        acc.setdefault(S, {})
        key = (inv, maj)
        acc[S][key] = acc[S].get(key, 0) + cnt
    fv = FundVector(n, {S: QTPoly(d) for S, d in acc.items()})
    sol = fund_solve(fv)
    out = {}
    for lam, c in sol.items():
        pol = qt_is_polynomial(c)
        if pol is None:
            raise ArithmeticError(f"non-polynomial Kostka coefficient at {lam}, {mu}")
        out[lam] = pol
    return out


def htilde(mu):
    mu = cb.as_partition(mu)
    _check(sum(mu))
    return from_basis("s", kostka_column(mu))


@lru_cache(maxsize=None)
def htilde_p(mu):
    """p-coefficients of H~_mu as polynomials."""
    return {lam: qt_is_polynomial(c) for lam, c in htilde(mu).terms.items()}


def kostka_table(n):
    """{mu: {lam: QTPoly}} for all mu of n."""
    return {mu: kostka_column(mu) for mu in cb.enumerate_partitions(n)}


# -- common denominators ------------------------------------------------------


@lru_cache(maxsize=None)
def _cyclotomic(d):
    """Integer coefficients (low degree first) of the d-th cyclotomic polynomial."""
    from ._polygcd import udivexact
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = udivexact(poly, _cyclotomic(e))
    return tuple(poly)


@lru_cache(maxsize=None)
def _factor_poly(key):
    d, i1, j1 = key
    coeffs = _cyclotomic(d)
    top = len(coeffs) - 1
    return QTPoly({(i1 * k, j1 * (top - k)): c for k, c in enumerate(coeffs) if c})


def binomial_factors(i, j):
    """Factor keys (d, i', j') with q^i - t^j = prod of the keyed polynomials."""
    g = gcd(i, j)
    i1, j1 = i // g, j // g
    return [(d, i1, j1) for d in range(1, g + 1) if g % d == 0]


def wmu_factored(mu):
    """(sign, {factor key: multiplicity}) with w_mu = sign * prod factors."""
    sign = 1
    mult = {}
    for s, i, j in cb.wmu_factors(mu):
        sign *= s
        for key in binomial_factors(i, j):
            mult[key] = mult.get(key, 0) + 1
    return sign, mult


def _product(mult):
    out = ONE
    for key in sorted(mult):
        f = _factor_poly(key)
        for _ in range(mult[key]):
            out = out * f
    return out


@lru_cache(maxsize=None)
def _denominators(n):
    parts = cb.enumerate_partitions(n)
    facs = {mu: wmu_factored(mu) for mu in parts}
    lcm = {}
    for _, mult in facs.values():
        for key, m in mult.items():
            lcm[key] = max(lcm.get(key, 0), m)
    L = _product(lcm)
    cof = {}
    for mu, (sign, mult) in facs.items():
        rest = {key: lcm[key] - mult.get(key, 0) for key in lcm}
        cof[mu] = _product(rest).scale(sign)
    return L, lcm, cof


def _star_schur_table(n):
    """{(lam, mu): n! * <s_lam, H~_mu>_*} as integer polynomials."""
    parts = cb.enumerate_partitions(n)
    nfact = factorial(n)
    # star_weight carries z_rho; W[rho] = eps_rho prod (1-t^k)(1-q^k)
    W = {rho: star_weight(rho).scale(Fraction(1, cb.zlambda(rho))) for rho in parts}
    C = {}
    for mu in parts:
        K = kostka_column(mu)
        for rho in parts:
            B = QTPoly()
            for nu, k in K.items():
                chi = cb.mn_character(nu, rho)
                if chi:
                    B = B + k.scale(chi)
            C[mu, rho] = (B * W[rho]).scale(nfact // cb.zlambda(rho))
    out = {}
    for lam in parts:
        for mu in parts:
            acc = QTPoly()
            for rho in parts:
                chi = cb.mn_character(lam, rho)
                if chi:
                    acc = acc + C[mu, rho].scale(chi)
            out[lam, mu] = acc
    return out


def _divide_by(num, L, lcm):
    quo = num.exact_div(L)
    if quo is not None:
        return qt(quo)
    # peel the factors one at a time; whatever does not divide stays below
    rest = {}
    for key, m in lcm.items():
        f = _factor_poly(key)
        k = 0
        while k < m:
            nxt = num.exact_div(f)
            if nxt is None:
                break
            num = nxt
            k += 1
        if k < m:
            rest[key] = m - k
    return QTRat(num, _product(rest))


@lru_cache(maxsize=None)
def nabla_matrix(n):
    """{lam: {nu: QTRat}} with nabla s_lam = sum_nu M[lam][nu] s_nu."""
    with _lock:
        return _nabla_matrix(n)


def _nabla_matrix(n):
    parts = cb.enumerate_partitions(n)
    if n == 0:
        return {(): {(): qt(1)}}
    L, lcm, cof = _denominators(n)
    K = {mu: kostka_column(mu) for mu in parts}
    S = _star_schur_table(n)
    weight = {mu: cof[mu] * cb.Tmu(mu) for mu in parts}
    A = {key: v * weight[key[1]] for key, v in S.items() if v}
    # N[lam][nu] = sum_mu K[mu][nu] * A[lam, mu], done as big-int dot products
    qdeg = max(p.max_exponents()[0] for p in A.values()) + max(
        k.max_exponents()[0] for col in K.values() for k in col.values())
    tdeg = max(p.max_exponents()[1] for p in A.values()) + max(
        k.max_exponents()[1] for col in K.values() for k in col.values())
    amax = max(max(abs(c) for _, c in p.items()) for p in A.values())
    kl1 = max(sum(sum(abs(c) for _, c in k.items()) for k in (K[mu].get(nu) for mu in parts) if k)
              for nu in parts)
    lay = KronLayout(qdeg, tdeg, amax * kl1)
    Ai = {key: lay.pack(v) for key, v in A.items()}
    Ki = {(mu, nu): lay.pack(k) for mu in parts for nu, k in K[mu].items()}
    nfact = factorial(n)
    out = {}
    for lam in parts:
        row = {}
        for nu in parts:
            total = 0
            for mu in parts:
                a = Ai.get((lam, mu))
                k = Ki.get((mu, nu))
                if a and k:
                    total += a * k
            if total:
                num = lay.unpack(total)
                row[nu] = _divide_by(num, L, lcm) * Fraction(1, nfact)
        out[lam] = row
    return out


def nabla(f):
    """Nabla, extended linearly over degrees."""
    pieces = {}
    for d in f.degrees():
        M = nabla_matrix(d)
        co = basis_extract(f.part(d), "s")
        for lam, c in co.items():
            for nu, v in M[lam].items():
                pieces.setdefault(nu, []).append((c * v))
    return from_basis("s", {nu: qt_sum(v) for nu, v in pieces.items()})


def nabla_positivity_report(f, sign=1):
    """Per-lambda sign * <nabla f, s_lam> with polynomiality and N[q,t] verdicts."""
    g = nabla(f)
    co = basis_extract(g, "s")
    degs = f.degrees()
    lams = []
    for d in degs:
        lams.extend(cb.enumerate_partitions(d))
    rows = []
    for lam in lams:
        c = co.get(lam, qt(0)) * sign
        pol = qt_is_polynomial(c)
        rows.append({
            "partition": lam,
            "coeff": c,
            "polynomial": pol,
            "nonneg": qt_is_nonneg_polynomial(c),
        })
    return {"rows": rows, "verdict": all(r["nonneg"] for r in rows)}


def check_orthogonality(n):
    """First (lam, mu, value) where <H~_lam, H~_mu>_* differs from chi(lam=mu) w_mu, or None."""
    from .symfun import star
    parts = cb.enumerate_partitions(n)
    H = {mu: htilde(mu) for mu in parts}
    for lam in parts:
        for mu in parts:
            v = star(H[lam], H[mu])
            want = qt(cb.wmu(mu)) if lam == mu else qt(0)
            if v != want:
                return lam, mu, v
    return None


__all__ = ["htilde", "kostka_column", "kostka_table", "nabla", "nabla_matrix",
           "nabla_positivity_report", "check_orthogonality", "SymFun"]
