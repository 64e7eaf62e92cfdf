"""Plethystic substitution on the power-sum store.

An alphabet is a sum of atoms.  Each atom is ``coef * z^zexp * (eps) * X`` or
the same without X (a constant letter-count term).  p_k of an atom raises
q, t and z to the k-th power inside coef and z^zexp, multiplies by (-1)^k
when eps is set, and turns X into p_k.  Coefficients of the symmetric
function being substituted into are left alone.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from . import combinat as cb
from .exactalg import ONE_QT, ZSeries, qt, qt_mul_raw, qt_sum
from .symfun import SymFun, _check, get_trunc

Atom = namedtuple("Atom", "coef zexp eps has_x")


class Alphabet:
    """Formal sum of atoms; build with X, Z, const() and +, -, scalar *."""

    __slots__ = ("atoms",)

    def __init__(self, atoms=()):
        merged = {}
        for a in atoms:
            key = (a.zexp, a.eps, a.has_x)
            merged[key] = merged[key] + a.coef if key in merged else qt(a.coef)
        self.atoms = tuple(Atom(c, z, e, x) for (z, e, x), c in sorted(merged.items()) if c)

    def __add__(self, other):
        other = _as_alpha(other)
        return Alphabet(self.atoms + other.atoms)

    __radd__ = __add__

    def __neg__(self):
        return Alphabet(Atom(-a.coef, a.zexp, a.eps, a.has_x) for a in self.atoms)

    def __sub__(self, other):
        return self + (-_as_alpha(other))

    def __rsub__(self, other):
        return _as_alpha(other) - self

    def __mul__(self, other):
        """Multiply by a scalar in Q(q,t), by Z (the letter z) or by EPS."""
        if other is EPS:
            return Alphabet(Atom(a.coef, a.zexp, not a.eps, a.has_x) for a in self.atoms)
        if isinstance(other, Alphabet):
            if not other._is_monomial():
                if self._is_monomial():
                    return other * self
                raise ValueError("alphabets multiply only by monomials in z times scalars")
            (o,) = other.atoms
            return Alphabet(Atom(a.coef * o.coef, a.zexp + o.zexp, a.eps, a.has_x) for a in self.atoms)
        c = qt(other)
        return Alphabet(Atom(a.coef * c, a.zexp, a.eps, a.has_x) for a in self.atoms)

    __rmul__ = __mul__

    def _is_monomial(self):
        return len(self.atoms) == 1 and not self.atoms[0].has_x and not self.atoms[0].eps

    def __truediv__(self, other):
        if isinstance(other, Alphabet):
            if not other._is_monomial():
                raise ValueError("can only divide an alphabet by a monomial")
            (o,) = other.atoms
            return Alphabet(Atom(a.coef / o.coef, a.zexp - o.zexp, a.eps, a.has_x) for a in self.atoms)
        return self * (ONE_QT / qt(other))

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        bits = []
        for a in self.atoms:
            s = f"({a.coef})"
            if a.zexp:
                s += f"*z^{a.zexp}"
            if a.eps:
                s += "*eps"
            if a.has_x:
                s += "*X"
            bits.append(s)
        return "Alphabet(" + " + ".join(bits or ["0"]) + ")"


class _Eps:
    def __repr__(self):
        return "EPS"


EPS = _Eps()


def _as_alpha(x):
    if isinstance(x, Alphabet):
        return x
    return const(x)


def const(c, zexp=0):
    """The constant alphabet c * z^zexp (c in Q(q,t))."""
    return Alphabet([Atom(qt(c), zexp, False, False)])


X = Alphabet([Atom(ONE_QT, 0, False, True)])
Z = const(1, 1)


def _sign(k, eps):
    return -1 if eps and k % 2 else 1


@lru_cache(maxsize=4096)
def pk_image(k, alphabet):
    """p_k[A] as a list of (zexp, with_pk, QTRat)."""
    out = []
    for a in alphabet.atoms:
        c = a.coef.subs_power(k)
        if _sign(k, a.eps) < 0:
            c = -c
        out.append((a.zexp * k, a.has_x, c))
    return out


@lru_cache(maxsize=8192)
def _p_lambda_image(lam, alphabet):
    """p_lam[A] as {(zexp, partition): [raw pairs]} collapsed to QTRat values."""
    acc = {(0, ()): ONE_QT}
    for k in lam:
        img = pk_image(k, alphabet)
        nxt = {}
        for (ze, mu), c in acc.items():
            for zk, with_pk, ck in img:
                key = (ze + zk, cb.union(mu, (k,)) if with_pk else mu)
                nxt.setdefault(key, []).append(qt_mul_raw(c, ck))
        acc = {key: v for key, v in ((key, qt_sum(v)) for key, v in nxt.items()) if v}
    return acc


def plethysm(f, alphabet):
    """f[A] as a closed ZSeries whose coefficients are SymFun values."""
    alphabet = _as_alpha(alphabet)
    acc = {}
    for lam, c in f.terms.items():
        for (ze, mu), v in _p_lambda_image(lam, alphabet).items():
            acc.setdefault(ze, {}).setdefault(mu, []).append(qt_mul_raw(c, v))
    coeffs = {}
    for ze, d in acc.items():
        terms = {mu: qt_sum(v) for mu, v in d.items()}
        for mu in terms:
            _check(sum(mu))
        sf = SymFun._of(terms)
        if sf:
            coeffs[ze] = sf
    lo = min(coeffs, default=0)
    hi = max(coeffs, default=0)
    return ZSeries(coeffs, lo, hi, True, True)


def plethysm_sym(f, alphabet):
    """f[A] for an alphabet free of z; returns a SymFun."""
    s = plethysm(f, alphabet)
    if any(k != 0 for k in s.coeffs):
        raise ValueError("alphabet involves z; use plethysm() for a series")
    return s.coeffs.get(0, SymFun._of({}))


def compose(f, g):
    """f[g] for a SymFun g: p_k[g] raises q, t and the p-indices of g by k."""
    out = SymFun._of({})
    cache = {}

    def pk_of_g(k):
        if k not in cache:
            cache[k] = SymFun._of({tuple(sorted((k * x for x in mu), reverse=True)): c.subs_power(k)
                                   for mu, c in g.terms.items()})
        return cache[k]

    for lam, c in f.terms.items():
        term = SymFun.scalar(c)
        for k in lam:
            term = term * pk_of_g(k)
        out = out + term
    return out


def omega_series(alphabet, nmax=None):
    """Omega[A] = sum_n h_n[A] as a z-series, keeping n <= nmax per atom.

    Every atom must carry a nonzero power of z so the window is meaningful.
    The result is exact on its window; sides that got truncated are marked open.
    """
    alphabet = _as_alpha(alphabet)
    if nmax is None:
        nmax = get_trunc()
    result = ZSeries({0: SymFun.scalar(1)}, 0, 0, True, True)
    for a in alphabet.atoms:
        if a.zexp == 0:
            raise ValueError("Omega needs every atom to carry a power of z")
        single = Alphabet([Atom(a.coef, 0, a.eps, a.has_x)])
        coeffs = {}
        for n in range(nmax + 1):
            hn = _h_n_of(n, single)
            if hn:
                coeffs[a.zexp * n] = hn
        if a.zexp > 0:
            series = ZSeries(coeffs, 0, a.zexp * nmax + (a.zexp - 1), True, False)
        else:
            series = ZSeries(coeffs, a.zexp * nmax - (-a.zexp - 1), 0, False, True)
        result = result.mul(series)
    return result


@lru_cache(maxsize=4096)
def _h_n_of(n, alphabet):
    """h_n[A] for a z-free alphabet."""
    acc = {}
    for lam in cb.enumerate_partitions(n):
        zl = cb.zlambda(lam)
        for (_, mu), v in _p_lambda_image(lam, alphabet).items():
            acc.setdefault(mu, []).append((v.num.scale(Fraction(1, zl)), v.den))
    return SymFun._of({mu: qt_sum(v) for mu, v in acc.items()})


def h_of_rank1(n, u, v, v_zexp=0):
    """Closed form of h_n[(1-u)v] for monomials u (in q,t) and v = v * z^v_zexp.

    Returns (coefficient, exponent of z): (1, 0) if n == 0 else ((1-u) v^n, n*v_zexp).
    """
    u, v = qt(u), qt(v)
    if n == 0:
        return ONE_QT, 0
    return (ONE_QT - u) * v ** n, n * v_zexp
