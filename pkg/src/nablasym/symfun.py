"""Symmetric functions over Q(q,t), stored in the power-sum basis.

A SymFun is a sparse map partition -> QTRat (coefficient of p_lambda).  The
other bases (m, e, h, s) are views computed through the Hall scalar product.
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from functools import lru_cache

from . import combinat as cb
from .exactalg import (ONE, ONE_QT, ZERO_QT, QTPoly, QTRat, qt, qt_mul_raw, qt_sum)

BASES = ("m", "e", "h", "p", "s")

_state = threading.local()
_DEFAULT_TRUNC = int(os.environ.get("NABLASYM_TRUNC", 8))


class DegreeOverflow(ArithmeticError):
    """A result would have degree above the session truncation."""


class InconsistentSystem(ArithmeticError):
    """fund_solve was handed a vector outside the span of Schur functions."""


def get_trunc() -> int:
    return getattr(_state, "trunc", _DEFAULT_TRUNC)


def set_trunc(n: int):
    global _DEFAULT_TRUNC
    if n < 1:
        raise ValueError("trunc must be at least 1")
    _DEFAULT_TRUNC = n
    _state.trunc = n


class truncation:
    """Context manager raising the degree bound temporarily."""

    def __init__(self, n):
        self.n = n

    def __enter__(self):
        self.old = get_trunc()
        _state.trunc = self.n
        return self

    def __exit__(self, *exc):
        _state.trunc = self.old


def _check(deg):
    if deg > get_trunc():
        raise DegreeOverflow(f"degree {deg} exceeds truncation {get_trunc()}")


class SymFun:
    __slots__ = ("terms",)

    def __init__(self, terms=None, _trusted=False):
        if _trusted:
            self.terms = terms
            return
        out = {}
        for lam, c in (terms or {}).items():
            lam = cb.as_partition(lam)
            c = qt(c)
            if c:
                _check(sum(lam))
                out[lam] = c
        self.terms = out

    @classmethod
    def _of(cls, terms):
        return cls({k: v for k, v in terms.items() if v}, _trusted=True)

    @classmethod
    def scalar(cls, c):
        c = qt(c)
        return cls._of({(): c})

    # -- structure --

    def degrees(self):
        return sorted({sum(lam) for lam in self.terms})

    def degree(self):
        """Top degree (-1 for zero)."""
        return max((sum(lam) for lam in self.terms), default=-1)

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def part(self, d):
        return SymFun._of({lam: c for lam, c in self.terms.items() if sum(lam) == d})

    def graded(self):
        out = {}
        for lam, c in self.terms.items():
            out.setdefault(sum(lam), {})[lam] = c
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SymFun):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, QTPoly, QTRat)):
            return self == SymFun.scalar(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "SymFun(" + render(self, "p") + ")"

    # -- arithmetic --

    def __neg__(self):
        return SymFun._of({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return SymFun._of(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = qt(c)
        if not c:
            return SymFun._of({})
        return SymFun._of({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QTPoly, QTRat)):
            return self.scale(other)
        if not isinstance(other, SymFun):
            return NotImplemented
        if not self.terms or not other.terms:
            return SymFun._of({})
        _check(self.degree() + other.degree())
        acc = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                acc.setdefault(cb.union(l1, l2), []).append(qt_mul_raw(c1, c2))
        return SymFun._of({k: qt_sum(v) for k, v in acc.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(ONE_QT / qt(c))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = SymFun.scalar(1)
        for _ in range(e):
            out = out * self
        return out

    def map_coeffs(self, fn):
        return SymFun._of({k: fn(v) for k, v in self.terms.items()})

    def specialize(self, q=None, t=None):
        return self.map_coeffs(lambda c: c.specialize(q, t))


def _lift(x):
    if isinstance(x, SymFun):
        return x
    if isinstance(x, (int, Fraction, QTPoly, QTRat)):
        return SymFun.scalar(x)
    return None


def lincomb(pairs):
    """Sum of c * f over (c, f) pairs with one normalization per coefficient."""
    acc = {}
    for c, f in pairs:
        c = qt(c)
        if not c:
            continue
        for lam, v in f.terms.items():
            acc.setdefault(lam, []).append(qt_mul_raw(c, v))
    return SymFun._of({k: qt_sum(v) for k, v in acc.items()})


# -- transition data per degree ----------------------------------------------


@lru_cache(maxsize=None)
def p_to_m(n):
    """{lam: {mu: int}} with p_lam = sum_mu M[lam][mu] m_mu."""
    parts = cb.enumerate_partitions(n)
    out = {}
    for lam in parts:
        out[lam] = _merge_counts(lam)
    return out


def _merge_counts(lam):
    """Coefficient of x^mu in p_lam for every partition mu: ways to pour the
    parts of lam into bins with loads exactly mu."""
    n = sum(lam)

    @lru_cache(maxsize=None)
    def ways(i, remaining):
        if i == len(lam):
            return 1 if not any(remaining) else 0
        total = 0
        for j, r in enumerate(remaining):
            if r >= lam[i]:
                total += ways(i + 1, remaining[:j] + (r - lam[i],) + remaining[j + 1:])
        return total

    res = {}
    for mu in cb.enumerate_partitions(n):
        if len(mu) <= len(lam):
            c = ways(0, mu)
            if c:
                res[mu] = c
    return res


def _frac_inverse(rows, keys):
    """Inverse of a square Fraction matrix given as {r: {c: v}} over the same keys."""
    n = len(keys)
    a = [[Fraction(rows[r].get(c, 0)) for c in keys] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(keys)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return {keys[i]: {keys[j]: a[i][n + j] for j in range(n) if a[i][n + j]} for i in range(n)}


@lru_cache(maxsize=None)
def m_to_p(n):
    """{lam: {mu: Fraction}} with m_lam = sum_mu c p_mu."""
    parts = cb.enumerate_partitions(n)
    inv = _frac_inverse(p_to_m(n), parts)
    # p_lam = sum_mu M[lam][mu] m_mu, so m_nu = sum_lam (M^-1)[nu][lam] p_lam
    out = {}
    for nu in parts:
        out[nu] = dict(inv[nu])
    return out


@lru_cache(maxsize=None)
def _single_p(kind, n):
    """e_n, h_n in p: {lam: Fraction}."""
    out = {}
    for lam in cb.enumerate_partitions(n):
        c = Fraction(1, cb.zlambda(lam))
        if kind == "e":
            c *= cb.sign_eps(lam)
        out[lam] = c
    return out


def _product_p(rows):
    acc = {(): Fraction(1)}
    for row in rows:
        nxt = {}
        for l1, c1 in acc.items():
            for l2, c2 in row.items():
                k = cb.union(l1, l2)
                nxt[k] = nxt.get(k, 0) + c1 * c2
        acc = {k: v for k, v in nxt.items() if v}
    return acc


@lru_cache(maxsize=None)
def basis_p_expansion(basis, lam):
    """Rational p-expansion {mu: Fraction} of the basis element b_lam."""
    lam = tuple(lam)
    if basis == "p":
        return {lam: Fraction(1)}
    if basis in ("e", "h"):
        return _product_p([_single_p(basis, k) for k in lam])
    if basis == "s":
        n = sum(lam)
        out = {}
        for mu in cb.enumerate_partitions(n):
            chi = cb.mn_character(lam, mu)
            if chi:
                out[mu] = Fraction(chi, cb.zlambda(mu))
        return out
    if basis == "m":
        return dict(m_to_p(sum(lam))[lam])
    raise ValueError(f"unknown basis {basis!r}")


def _from_rational(exp):
    return SymFun._of({k: qt(v) for k, v in exp.items()})


def basis_inject(basis, lam):
    lam = cb.as_partition(lam)
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    _check(sum(lam))
    return _from_rational(basis_p_expansion(basis, lam))


def m(lam):
    return basis_inject("m", lam)


def s(lam):
    return basis_inject("s", lam)


def p(n):
    return basis_inject("p", _as_index(n))


def e(n):
    return basis_inject("e", _as_index(n))


def h(n):
    return basis_inject("h", _as_index(n))


def _as_index(n):
    if isinstance(n, int):
        if n < 0:
            raise ValueError("negative degree")
        return (n,) if n else ()
    return tuple(n)


def one():
    return SymFun.scalar(1)


def zero():
    return SymFun._of({})


def _dual_expansion(basis, lam):
    """p-expansion of the Hall-dual element used to read coefficients in `basis`."""
    if basis == "m":
        return basis_p_expansion("h", lam)
    if basis == "h":
        return basis_p_expansion("m", lam)
    if basis == "e":
        return {k: v * cb.sign_eps(k) for k, v in basis_p_expansion("m", lam).items()}
    if basis == "s":
        return basis_p_expansion("s", lam)
    raise ValueError(basis)


def basis_extract(f, basis):
    """{lam: QTRat} with f = sum c_lam b_lam; zero coefficients omitted."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    if basis == "p":
        return dict(f.terms)
    out = {}
    for d, comp in f.graded().items():
        for lam in cb.enumerate_partitions(d):
            dual = _dual_expansion(basis, lam)
            c = qt_sum(
                (v.num.scale(dual[mu] * cb.zlambda(mu)), v.den)
                for mu, v in comp.items() if mu in dual
            )
            if c:
                out[lam] = c
    return out


def schur_coeff(f, lam):
    dual = basis_p_expansion("s", lam)
    return qt_sum((v.num.scale(dual[mu] * cb.zlambda(mu)), v.den)
                  for mu, v in f.terms.items() if mu in dual)


def from_basis(basis, coeffs):
    """Inverse of basis_extract: build sum c_lam b_lam."""
    acc = {}
    for lam, c in coeffs.items():
        c = qt(c)
        if not c:
            continue
        _check(sum(lam))
        for mu, v in basis_p_expansion(basis, tuple(lam)).items():
            acc.setdefault(mu, []).append((c.num.scale(v), c.den))
    return SymFun._of({k: qt_sum(v) for k, v in acc.items()})


def omega(f):
    return SymFun._of({lam: (c if cb.sign_eps(lam) == 1 else -c) for lam, c in f.terms.items()})


def hall(f, g):
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    return qt_sum(_scaled(qt_mul_raw(c, big.terms[lam]), cb.zlambda(lam))
                  for lam, c in small.terms.items() if lam in big.terms)


def _scaled(pair, k):
    num, den = pair
    return num.scale(k), den


@lru_cache(maxsize=None)
def star_weight(lam) -> QTPoly:
    """(-1)^{|lam|-l} z_lam prod (1-t^k)(1-q^k)."""
    out = QTPoly.constant(cb.sign_eps(lam) * cb.zlambda(lam))
    for k in lam:
        out = out * (ONE - QTPoly.monomial(0, k)) * (ONE - QTPoly.monomial(k, 0))
    return out


def star(f, g):
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    out = []
    for lam, c in small.terms.items():
        if lam in big.terms:
            num, den = qt_mul_raw(c, big.terms[lam])
            out.append((num * star_weight(lam), den))
    return qt_sum(out)


def petrie(k, n):
    if k < 1 or n < 0:
        raise ValueError("petrie needs k >= 1 and n >= 0")
    return from_basis("m", {lam: 1 for lam in cb.enumerate_partitions(n)
                            if not lam or lam[0] < k})


def render(f, basis="s"):
    co = basis_extract(f, basis)
    if not co:
        return "0"
    keys = sorted(co, key=cb.sort_key)
    return " + ".join(f"({co[k]})*{basis}{cb.render(k)}" for k in keys)


def to_json_obj(f, basis="s"):
    co = basis_extract(f, basis)
    keys = sorted(co, key=cb.sort_key)
    return {"basis": basis, "terms": [{"partition": list(k), "coeff": str(co[k])} for k in keys]}


# -- quasisymmetric fundamentals ----------------------------------------------


class FundVector:
    """Degree-n quasisymmetric function in the fundamental basis F_{n,S}."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        out = {}
        for S, c in (coeffs or {}).items():
            S = frozenset(S)
            if any(i < 1 or i > n - 1 for i in S):
                raise ValueError(f"descent set {sorted(S)} out of range for n={n}")
            c = qt(c)
            if c:
                out[S] = c
        self.coeffs = out

    def __eq__(self, other):
        if not isinstance(other, FundVector):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return FundVector(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = qt(c)
        return FundVector(self.n, {k: v * c for k, v in self.coeffs.items()})

    def __repr__(self):
        items = sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        body = " + ".join(f"({c})*F{sorted(S)}" for S, c in items)
        return f"FundVector(n={self.n}, {body or '0'})"


def schur_to_fund(lam):
    lam = cb.as_partition(lam)
    return FundVector(sum(lam), cb.syt_descents(lam))


def symfun_to_fund(f):
    """Fundamental expansion of a homogeneous symmetric function."""
    degs = f.degrees()
    if len(degs) > 1:
        raise ValueError("symfun_to_fund needs a homogeneous input")
    n = degs[0] if degs else 0
    acc = {}
    for lam, c in basis_extract(f, "s").items():
        for S, k in cb.syt_descents(lam).items():
            acc.setdefault(S, []).append((c.num.scale(k), c.den))
    return FundVector(n, {S: qt_sum(v) for S, v in acc.items()})


@lru_cache(maxsize=None)
def _fund_system(n):
    """Pivot subsets and the inverse of the square Schur -> F submatrix on them."""
    parts = cb.enumerate_partitions(n)
    cols = {lam: cb.syt_descents(lam) for lam in parts}
    subsets = sorted({S for c in cols.values() for S in c}, key=lambda S: (len(S), sorted(S)))
    # greedy row selection by Fraction elimination
    chosen = []
    basis_rows = []
    for S in subsets:
        row = [Fraction(cols[lam].get(S, 0)) for lam in parts]
        for piv_col, brow in basis_rows:
            if row[piv_col]:
                f = row[piv_col] / brow[piv_col]
                row = [x - f * y for x, y in zip(row, brow)]
        nz = next((i for i, x in enumerate(row) if x), None)
        if nz is not None:
            chosen.append(S)
            basis_rows.append((nz, row))
        if len(chosen) == len(parts):
            break
    square = {S: {lam: cols[lam].get(S, 0) for lam in parts} for S in chosen}
    # rows S, columns lam; invert as a matrix indexed positionally
    keys_r, keys_c = chosen, parts
    nn = len(parts)
    a = [[Fraction(square[S][lam]) for lam in keys_c] + [Fraction(int(i == j)) for j in range(nn)]
         for i, S in enumerate(keys_r)]
    for col in range(nn):
        piv = next(r for r in range(col, nn) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(nn):
            if r != col and a[r][col]:
                fct = a[r][col]
                a[r] = [x - fct * y for x, y in zip(a[r], a[col])]
    inv = [row[nn:] for row in a]  # inv[lam_index][S_index]
    return parts, chosen, inv


def fund_solve(v):
    """Schur coefficients {lam: QTRat} of a symmetric FundVector; raises InconsistentSystem otherwise."""
    n = v.n
    if n == 0:
        c = v.coeffs.get(frozenset(), ZERO_QT)
        return {(): c} if c else {}
    parts, chosen, inv = _fund_system(n)
    out = {}
    for i, lam in enumerate(parts):
        terms = []
        for j, S in enumerate(chosen):
            if inv[i][j] and S in v.coeffs:
                c = v.coeffs[S]
                terms.append((c.num.scale(inv[i][j]), c.den))
        c = qt_sum(terms)
        if c:
            out[lam] = c
    acc = {}
    for lam, c in out.items():
        for S, k in cb.syt_descents(lam).items():
            acc.setdefault(S, []).append((c.num.scale(k), c.den))
    back = FundVector(n, {S: qt_sum(t) for S, t in acc.items()})
    if back != v:
        bad = next(S for S in set(back.coeffs) | set(v.coeffs)
                   if back.coeffs.get(S, ZERO_QT) != v.coeffs.get(S, ZERO_QT))
        raise InconsistentSystem(f"not symmetric: coefficient of F{sorted(bad)} does not fit any Schur combination")
    return out


def from_schur(coeffs):
    return from_basis("s", coeffs)


__all__ = [
    "SymFun", "FundVector", "DegreeOverflow", "InconsistentSystem", "basis_inject",
    "basis_extract", "from_basis", "omega", "hall", "star", "petrie", "schur_to_fund",
    "fund_solve", "symfun_to_fund", "m", "s", "e", "h", "p", "one", "zero", "lincomb",
    "get_trunc", "set_trunc", "truncation", "ONE",
]
