"""Exact coefficient arithmetic: Laurent polynomials in q, t, the field Q(q, t),
and windowed Laurent series in an auxiliary variable z.

All values are immutable.  ``QTPoly`` stores a sparse map from exponent pairs
(a, b), meaning q^a t^b, to nonzero int or Fraction coefficients.  ``QTRat``
keeps a canonical reduced fraction of two ``QTPoly`` values, so equal field
elements compare equal structurally.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from math import inf
from numbers import Rational

from . import _polygcd


class WindowError(LookupError):
    """Coefficient requested outside the exactly-known window of a ZSeries."""


def _norm(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact rational: {c!r}")


# -- Kronecker substitution for large products --------------------------


def _pack(items, slot_of, nslots, nbytes):
    pos = bytearray(nslots * nbytes)
    neg = bytearray(nslots * nbytes)
    for key, c in items:
        off = slot_of(key) * nbytes
        if c > 0:
            pos[off:off + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[off:off + nbytes] = (-c).to_bytes(nbytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value, nslots, nbytes):
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * nslots, "little")
    raw = (value + offset).to_bytes(nslots * nbytes + 1, "little")
    out = []
    for s in range(nslots):
        d = int.from_bytes(raw[s * nbytes:(s + 1) * nbytes], "little") - half
        out.append(d)
    return out


def _kron_mul(d1, d2):
    """Product of two int-coefficient exponent dicts through one big-int multiply."""
    a1 = [k[0] for k in d1]
    b1 = [k[1] for k in d1]
    a2 = [k[0] for k in d2]
    b2 = [k[1] for k in d2]
    amin1, bmin1, bmin2, amin2 = min(a1), min(b1), min(b2), min(a2)
    wb = (max(b1) - bmin1) + (max(b2) - bmin2) + 1
    wa = (max(a1) - amin1) + (max(a2) - amin2) + 1
    bound = max(abs(c) for c in d1.values()) * max(abs(c) for c in d2.values())
    bound *= min(len(d1), len(d2))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    nslots = wa * wb
    v1 = _pack(d1.items(), lambda k: (k[0] - amin1) * wb + (k[1] - bmin1), nslots, nbytes)
    v2 = _pack(d2.items(), lambda k: (k[0] - amin2) * wb + (k[1] - bmin2), nslots, nbytes)
    digits = _unpack(v1 * v2, nslots, nbytes)
    amin, bmin = amin1 + amin2, bmin1 + bmin2
    out = {}
    for s, c in enumerate(digits):
        if c:
            i, j = divmod(s, wb)
            out[(amin + i, bmin + j)] = c
    return out


def _int_scale(d):
    """Common denominator L of the coefficients and the dict scaled by L."""
    den = 1
    for c in d.values():
        if type(c) is not int:
            den = den * c.denominator // _igcd(den, c.denominator)
    if den == 1:
        return 1, d
    return den, {k: int(c * den) for k, c in d.items()}


def _dict_mul(d1, d2):
    if len(d1) * len(d2) > 4000 and len(d1) > 8 and len(d2) > 8:
        s1, i1 = _int_scale(d1)
        s2, i2 = _int_scale(d2)
        out = _kron_mul(i1, i2)
        if s1 * s2 != 1:
            s = s1 * s2
            out = {k: _norm(Fraction(c, s)) for k, c in out.items()}
        return out
    out = {}
    get = out.get
    for (a1, b1), c1 in d1.items():
        for (a2, b2), c2 in d2.items():
            k = (a1 + a2, b1 + b2)
            out[k] = get(k, 0) + c1 * c2
    return {k: _norm(c) for k, c in out.items() if c}


class QTPoly:
    """Laurent polynomial in q and t with exact rational coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                c = _norm(c)
                if c:
                    clean[(int(a), int(b))] = c
        self._t = clean
        self._hash = None

    @classmethod
    def _raw(cls, d):
        obj = object.__new__(cls)
        obj._t = d
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c):
        c = _norm(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a=0, b=0, c=1):
        c = _norm(c)
        return cls._raw({(a, b): c} if c else {})

    # -- inspection --

    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        return self._t.items()

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and (0, 0) in self._t)

    def is_monomial(self):
        return len(self._t) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._t.get((0, 0), 0)

    def min_exponents(self):
        return (min(a for a, _ in self._t), min(b for _, b in self._t))

    def max_exponents(self):
        return (max(a for a, _ in self._t), max(b for _, b in self._t))

    def leading(self):
        """Lex-leading (q-major, then t) exponent and coefficient."""
        k = max(self._t)
        return k, self._t[k]

    def is_integral(self):
        return all(type(c) is int for c in self._t.values())

    def content(self):
        """Positive rational c with self / c primitive integral."""
        dens = 1
        for c in self._t.values():
            if type(c) is not int:
                dens = dens * c.denominator // _igcd(dens, c.denominator)
        num = 0
        for c in self._t.values():
            num = _igcd(num, int(c * dens))
        if dens == 1:
            return num or 1
        return Fraction(num, dens)

    # -- arithmetic --

    def __eq__(self, other):
        if isinstance(other, QTPoly):
            return self._t == other._t
        if isinstance(other, Rational):
            return self._t == ({(0, 0): _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self):
        return QTPoly._raw({k: -c for k, c in self._t.items()})

    def __add__(self, other):
        if not isinstance(other, QTPoly):
            if isinstance(other, Rational):
                other = QTPoly.constant(other)
            else:
                return NotImplemented
        if len(self._t) < len(other._t):
            small, big = self._t, other._t
        else:
            small, big = other._t, self._t
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return QTPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QTPoly):
            if isinstance(other, Rational):
                other = QTPoly.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _norm(c)
        if not c:
            return QTPoly._raw({})
        if c == 1:
            return self
        return QTPoly._raw({k: _norm(v * c) for k, v in self._t.items()})

    def shift(self, da, db):
        """Multiply by the monomial q^da t^db."""
        if not da and not db:
            return self
        return QTPoly._raw({(a + da, b + db): c for (a, b), c in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, QTPoly):
            if not self._t or not other._t:
                return QTPoly._raw({})
            if len(other._t) == 1:
                ((da, db), c), = other._t.items()
                return self.shift(da, db).scale(c)
            if len(self._t) == 1:
                ((da, db), c), = self._t.items()
                return other.shift(da, db).scale(c)
            return QTPoly._raw(_dict_mul(self._t, other._t))
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if len(self._t) != 1:
                raise ValueError("negative power of a non-monomial QTPoly")
            ((a, b), c), = self._t.items()
            return QTPoly._raw({(a * e, b * e): _norm(Fraction(1) / Fraction(c) ** (-e))})
        out = QTPoly.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def exact_div(self, other):
        """Quotient self / other if it is a Laurent polynomial, else None."""
        if not other._t:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._t:
            return self
        if len(other._t) == 1:
            ((a, b), c), = other._t.items()
            return self.shift(-a, -b).scale(Fraction(1) / Fraction(c))
        quo = _kron_div(self, other)
        if quo is not None:
            return quo
        return _lex_div(self, other)

    # -- substitution --

    def subs_power(self, k):
        """q -> q^k, t -> t^k."""
        if k == 1:
            return self
        return QTPoly._raw({(a * k, b * k): c for (a, b), c in self._t.items()})

    def evaluate(self, q=None, t=None):
        """Substitute exact values for q and/or t; returns a QTPoly."""
        out = {}
        for (a, b), c in self._t.items():
            v = Fraction(c)
            if q is not None:
                v *= Fraction(q) ** a
                a = 0
            if t is not None:
                v *= Fraction(t) ** b
                b = 0
            out[(a, b)] = out.get((a, b), 0) + v
        return QTPoly(out)

    def swap(self):
        return QTPoly._raw({(b, a): c for (a, b), c in self._t.items()})

    # -- rendering --

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"QTPoly({render_poly(self)!r})"


def _kron_div(num, den):
    """Exact division through big-int evaluation; verified by multiplication."""
    if len(den) < 8 or not num.is_integral() or not den.is_integral():
        return None
    (na0, nb0), (na1, nb1) = num.min_exponents(), num.max_exponents()
    (da0, db0), (da1, db1) = den.min_exponents(), den.max_exponents()
    qa0, qb0 = na0 - da0, nb0 - db0
    qa1, qb1 = na1 - da1, nb1 - db1
    if qa1 < qa0 or qb1 < qb0:
        return None
    wb = nb1 - nb0 + 1
    wa = na1 - na0 + 1
    nslots = wa * wb
    bits = max(abs(c) for c in num._t.values()).bit_length() + 64
    nbytes = (bits + 7) // 8
    vn = _pack(num._t.items(), lambda k: (k[0] - na0) * wb + (k[1] - nb0), nslots, nbytes)
    vd = _pack(den._t.items(), lambda k: (k[0] - da0) * wb + (k[1] - db0), nslots, nbytes)
    quo, rem = divmod(vn, vd)
    if rem:
        return None
    digits = _unpack(quo, nslots, nbytes)
    out = {}
    for s, c in enumerate(digits):
        if c:
            i, j = divmod(s, wb)
            out[(qa0 + i, qb0 + j)] = c
    if not out:
        return None
    cand = QTPoly._raw(out)
    return cand if cand * den == num else None


def _lex_div(num, den):
    """Multivariate division in lex order; None when den does not divide num."""
    (na0, nb0) = num.min_exponents()
    (da0, db0) = den.min_exponents()
    amin, bmin = na0 - da0, nb0 - db0
    (lk, lc) = den.leading()
    lc = Fraction(lc)
    rem = dict(num._t)
    quo = {}
    dterms = list(den._t.items())
    while rem:
        k = max(rem)
        qa, qb = k[0] - lk[0], k[1] - lk[1]
        if qa < amin or qb < bmin:
            return None
        qc = _norm(rem[k] / lc)
        quo[(qa, qb)] = qc
        for (a, b), c in dterms:
            kk = (a + qa, b + qb)
            v = rem.get(kk, 0) - qc * c
            if v:
                rem[kk] = v
            else:
                rem.pop(kk, None)
    return QTPoly(quo)


def render_poly(p):
    """Canonical text: terms by q-exponent desc then t-exponent desc, e.g. 'q^2*t + q + 2'."""
    if not p._t:
        return "0"
    parts = []
    for (a, b) in sorted(p._t, reverse=True):
        c = p._t[(a, b)]
        mono = []
        if a:
            mono.append("q" if a == 1 else f"q^{a}")
        if b:
            mono.append("t" if b == 1 else f"t^{b}")
        neg = c < 0
        mag = -c if neg else c
        if mono:
            body = "*".join(mono) if mag == 1 else f"{mag}*" + "*".join(mono)
        else:
            body = str(mag)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


q = QTPoly.monomial(1, 0)
t = QTPoly.monomial(0, 1)
ONE = QTPoly.constant(1)


# -- bivariate gcd on QTPoly ---------------------------------------------


def _to_dense(p):
    """Dense Z[t][q] form of an integral polynomial with nonnegative exponents."""
    amax = max(a for a, _ in p._t)
    rows = [[] for _ in range(amax + 1)]
    by_a = {}
    for (a, b), c in p._t.items():
        by_a.setdefault(a, {})[b] = c
    for a, row in by_a.items():
        bmax = max(row)
        dense = [0] * (bmax + 1)
        for b, c in row.items():
            dense[b] = c
        rows[a] = dense
    return rows


def _from_dense(rows):
    out = {}
    for a, row in enumerate(rows):
        for b, c in enumerate(row):
            if c:
                out[(a, b)] = c
    return QTPoly._raw(out)


def _primitive_integral(p):
    c = p.content()
    return p.scale(Fraction(1) / Fraction(c)) if c != 1 else p


def poly_gcd(f, g):
    """Gcd of two polynomials with nonnegative exponents, up to a unit.

    Both inputs are made primitive integral first; the result is primitive
    with positive lex-leading coefficient.
    """
    if not f._t:
        return _normalize_unit(g)
    if not g._t:
        return _normalize_unit(f)
    f = _primitive_integral(f)
    g = _primitive_integral(g)
    fa, fb = f.max_exponents()
    ga, gb = g.max_exponents()
    if f.is_constant() or g.is_constant():
        return ONE
    # one side free of q (or of t): gcd with the content along that variable
    if fa == 0 or ga == 0:
        uni, other = (f, g) if fa == 0 else (g, f)
        acc = _dense_t(uni)
        for row in _to_dense(other):
            if row:
                acc = _polygcd.ugcd(acc, row)
                if len(acc) == 1:
                    return ONE
        return _normalize_unit(QTPoly._raw({(0, b): c for b, c in enumerate(acc) if c}))
    if fb == 0 or gb == 0:
        return poly_gcd(f.swap(), g.swap()).swap()
    res = _polygcd.bgcd(_to_dense(f), _to_dense(g))
    return _normalize_unit(_from_dense(res))


def _dense_t(p):
    bmax = max(b for _, b in p._t)
    out = [0] * (bmax + 1)
    for (_, b), c in p._t.items():
        out[b] = c
    return out


def _normalize_unit(p):
    if not p._t:
        return p
    p = _primitive_integral(p)
    if p.leading()[1] < 0:
        p = -p
    return p


# -- the field Q(q, t) ----------------------------------------------------


class QTRat:
    """Element of Q(q, t) as a canonical reduced fraction of QTPoly values.

    The denominator is primitive integral, has positive lex-leading
    coefficient and is divisible by neither q nor t; monomial factors move to
    the numerator as (possibly negative) exponents.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        num = _as_poly(num)
        if den is None:
            self.num, self.den = num, ONE
        else:
            self.num, self.den = _canonical(num, _as_poly(den))
        self._hash = None

    @classmethod
    def _make(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_any(cls, x):
        if isinstance(x, QTRat):
            return x
        return cls._make(_as_poly(x), ONE)

    def is_polynomial(self):
        return self.den._t == ONE._t

    def __bool__(self):
        return bool(self.num._t)

    def is_zero(self):
        return not self.num._t

    def __eq__(self, other):
        if isinstance(other, QTRat):
            return self.num._t == other.num._t and self.den._t == other.den._t
        if isinstance(other, (QTPoly, Rational)):
            return self.den._t == ONE._t and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return QTRat._make(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.num._t:
            return self
        if not self.num._t:
            return other
        if self.den._t == other.den._t:
            if self.den._t == ONE._t:
                return QTRat._make(self.num + other.num, ONE)
            return QTRat(self.num + other.num, self.den)
        if other.den._t == ONE._t:
            return QTRat._make(self.num + other.num * self.den, self.den)
        if self.den._t == ONE._t:
            return QTRat._make(self.num * other.den + other.num, other.den)
        return QTRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is int or isinstance(other, Fraction):
            if not other:
                return QTRat._make(QTPoly._raw({}), ONE)
            return QTRat._make(self.num.scale(other), self.den)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.num._t or not other.num._t:
            return QTRat._make(QTPoly._raw({}), ONE)
        if self.den._t == ONE._t and other.den._t == ONE._t:
            return QTRat._make(self.num * other.num, ONE)
        if other.num.is_monomial() and other.den._t == ONE._t:
            return QTRat._make(self.num * other.num, self.den)
        if self.num.is_monomial() and self.den._t == ONE._t:
            return QTRat._make(other.num * self.num, other.den)
        return QTRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num._t:
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        return QTRat(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.num._t:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        if other.den._t == ONE._t and other.num.is_monomial():
            ((a, b), c), = other.num._t.items()
            return QTRat._make(self.num.shift(-a, -b).scale(Fraction(1) / Fraction(c)), self.den)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if self.den._t == ONE._t:
            return QTRat._make(self.num ** e, ONE)
        return QTRat._make(self.num ** e, self.den ** e)

    def subs_power(self, k):
        if k == 1:
            return self
        if self.den._t == ONE._t:
            return QTRat._make(self.num.subs_power(k), ONE)
        return QTRat(self.num.subs_power(k), self.den.subs_power(k))

    def specialize(self, q=None, t=None):
        """Substitute values for q and/or t, removing (q-1)/(t-1) singularities at 1."""
        num, den = self.num, self.den
        if q is not None and Fraction(q) == 1:
            num, den = _strip_root_at_one(num, den, var=0)
        if t is not None and Fraction(t) == 1:
            num, den = _strip_root_at_one(num, den, var=1)
        dv = den.evaluate(q, t)
        if dv.is_zero():
            raise ZeroDivisionError("pole at the specialization point")
        return QTRat(num.evaluate(q, t), dv)

    def __str__(self):
        if self.den._t == ONE._t:
            return render_poly(self.num)
        return f"({render_poly(self.num)})/({render_poly(self.den)})"

    def __repr__(self):
        return f"QTRat({str(self)!r})"


def _as_poly(x):
    if isinstance(x, QTPoly):
        return x
    if isinstance(x, Rational):
        return QTPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a q,t coefficient")


def _coerce(x):
    if isinstance(x, QTRat):
        return x
    if isinstance(x, QTPoly):
        return QTRat._make(x, ONE)
    if isinstance(x, Rational):
        return QTRat._make(QTPoly.constant(x), ONE)
    return None


def _canonical(num, den):
    if not den._t:
        raise ZeroDivisionError("zero denominator in Q(q,t)")
    if not num._t:
        return num, ONE
    ma, mb = den.min_exponents()
    if ma or mb:
        den = den.shift(-ma, -mb)
        num = num.shift(-ma, -mb)
    if den.is_constant():
        return num.scale(Fraction(1) / Fraction(den.constant_value())), ONE
    na, nb = num.min_exponents()
    g = poly_gcd(num.shift(-na, -nb), den)
    if not g.is_constant():
        num = num.exact_div(g)
        den = den.exact_div(g)
        if num is None or den is None:
            raise ArithmeticError("gcd failed to divide")
    c = den.content()
    if den.leading()[1] < 0:
        c = -c
    if c != 1:
        inv = Fraction(1) / Fraction(c)
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _strip_root_at_one(num, den, var):
    """Divide num and den by (x-1) while both vanish at x=1 (x = q for var 0)."""
    lin = QTPoly._raw({(1, 0): 1, (0, 0): -1}) if var == 0 else QTPoly._raw({(0, 1): 1, (0, 0): -1})
    at_one = (lambda p: p.evaluate(q=1)) if var == 0 else (lambda p: p.evaluate(t=1))
    while at_one(den).is_zero() and at_one(num).is_zero() and num._t:
        num = num.exact_div(lin)
        den = den.exact_div(lin)
    return num, den


def qt(x):
    """Coerce an int, Fraction, QTPoly or QTRat to QTRat."""
    return QTRat.from_any(x)


ZERO_QT = QTRat._make(QTPoly._raw({}), ONE)
ONE_QT = QTRat._make(ONE, ONE)
Q_QT = QTRat._make(q, ONE)
T_QT = QTRat._make(t, ONE)


def qt_arith(a, b, op):
    """Exact field operation ``op`` in {'add','sub','mul','div'}."""
    a, b = qt(a), qt(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def qt_is_polynomial(a):
    """The Laurent-polynomial form of ``a`` if its denominator divides out, else None."""
    a = qt(a)
    if a.den._t == ONE._t:
        return a.num
    # canonical form is reduced, so a nonconstant denominator never divides;
    # the division test below re-checks that explicitly
    return a.num.exact_div(a.den)


def qt_is_nonneg_polynomial(a):
    p = qt_is_polynomial(a)
    if p is None:
        return False
    for (ea, eb), c in p.items():
        if ea < 0 or eb < 0 or c < 0 or type(c) is not int:
            return False
    return True


def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0."""
    return QTRat._make(QTPoly._raw({(i, 0): 1 for i in range(n)}), ONE)


# -- Laurent series in z ---------------------------------------------------


class ZSeries:
    """Laurent polynomial in z, exact on the window [lo, hi].

    ``closed_below`` / ``closed_above`` record that the represented series has
    no terms beyond the window on that side; otherwise terms there are
    unknown (dropped), and products shrink the window so every retained
    coefficient stays exact.
    """

    __slots__ = ("coeffs", "lo", "hi", "closed_below", "closed_above")

    def __init__(self, coeffs, lo=None, hi=None, closed_below=True, closed_above=True):
        coeffs = {int(k): v for k, v in coeffs.items() if v}
        if lo is None:
            lo = min(coeffs, default=0)
        if hi is None:
            hi = max(coeffs, default=0)
        if any(k < lo or k > hi for k in coeffs):
            coeffs = {k: v for k, v in coeffs.items() if lo <= k <= hi}
            # caller asked for a narrower window than the support
            closed_below = closed_below and not any(k < lo for k in coeffs)
        self.coeffs = coeffs
        self.lo = lo
        self.hi = hi
        self.closed_below = closed_below
        self.closed_above = closed_above

    @classmethod
    def polynomial(cls, coeffs):
        return cls(coeffs)

    def __repr__(self):
        return (f"ZSeries({self.coeffs!r}, lo={self.lo}, hi={self.hi}, "
                f"closed_below={self.closed_below}, closed_above={self.closed_above})")

    def _support_min(self):
        if not self.closed_below:
            return -inf
        return min(self.coeffs, default=inf)

    def _support_max(self):
        if not self.closed_above:
            return inf
        return max(self.coeffs, default=-inf)

    @property
    def truncated(self):
        return not (self.closed_below and self.closed_above)

    def __mul__(self, other):
        return self.mul(other)

    def mul(self, other, lo=None, hi=None):
        """Product, computing only exponents in the exact window ∩ [lo, hi]."""
        if not isinstance(other, ZSeries):
            return ZSeries({k: v * other for k, v in self.coeffs.items()},
                           self.lo, self.hi, self.closed_below, self.closed_above)
        new_hi = self.hi + other.hi
        if not self.closed_above:
            new_hi = min(new_hi, self.hi + other._support_min())
        if not other.closed_above:
            new_hi = min(new_hi, other.hi + self._support_min())
        new_lo = self.lo + other.lo
        if not self.closed_below:
            new_lo = max(new_lo, self.lo + other._support_max())
        if not other.closed_below:
            new_lo = max(new_lo, other.lo + self._support_max())
        closed_above = self.closed_above and other.closed_above
        closed_below = self.closed_below and other.closed_below
        if hi is not None and hi < new_hi:
            new_hi, closed_above = hi, False
        if lo is not None and lo > new_lo:
            new_lo, closed_below = lo, False
        if new_hi == inf or new_lo == -inf:
            raise WindowError("product has no finite exact window")
        new_lo, new_hi = int(new_lo), int(new_hi)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                if new_lo <= k <= new_hi:
                    v = a * b
                    out[k] = out[k] + v if k in out else v
        return ZSeries(out, new_lo, new_hi, closed_below, closed_above)

    def __add__(self, other):
        lo = max(self.lo if not self.closed_below else -inf, other.lo if not other.closed_below else -inf)
        hi = min(self.hi if not self.closed_above else inf, other.hi if not other.closed_above else inf)
        lo = min(self.lo, other.lo) if lo == -inf else lo
        hi = max(self.hi, other.hi) if hi == inf else hi
        out = {}
        for s in (self, other):
            for k, v in s.coeffs.items():
                if lo <= k <= hi:
                    out[k] = out[k] + v if k in out else v
        return ZSeries(out, int(lo), int(hi), self.closed_below and other.closed_below,
                       self.closed_above and other.closed_above)

    def scale(self, c):
        return ZSeries({k: v * c for k, v in self.coeffs.items()}, self.lo, self.hi,
                       self.closed_below, self.closed_above)

    def shift(self, m):
        """Multiply by z^m."""
        return ZSeries({k + m: v for k, v in self.coeffs.items()}, self.lo + m, self.hi + m,
                       self.closed_below, self.closed_above)

    def widen(self, lo=None, hi=None):
        """Extend the window over sides known to be zero."""
        new_lo, new_hi = self.lo, self.hi
        if lo is not None and lo < self.lo:
            if not self.closed_below:
                raise WindowError(f"cannot widen below {self.lo}: terms there are unknown")
            new_lo = lo
        if hi is not None and hi > self.hi:
            if not self.closed_above:
                raise WindowError(f"cannot widen above {self.hi}: terms there are unknown")
            new_hi = hi
        return ZSeries(self.coeffs, new_lo, new_hi, self.closed_below, self.closed_above)

    def inverse(self, one=None):
        """Multiplicative inverse of a series with constant term at z^0 equal to 1."""
        if not self.closed_below or self.lo != 0 or min(self.coeffs, default=1) < 0:
            raise WindowError("inversion needs a power series closed below at z^0")
        a0 = self.coeffs.get(0)
        if a0 is None or a0 != 1:
            raise ArithmeticError("constant term must be 1")
        hi = self.hi
        b = {0: a0}
        for n in range(1, hi + 1):
            acc = None
            for i in range(1, n + 1):
                ai = self.coeffs.get(i)
                bj = b.get(n - i)
                if ai and bj:
                    v = ai * bj
                    acc = v if acc is None else acc + v
            if acc:
                b[n] = -acc
        closed = self.closed_above and len(self.coeffs) == 1
        return ZSeries(b, 0, hi, True, closed)

    def coefficient(self, k):
        return z_extract(self, k)


def z_extract(s, k):
    """Exact coefficient of z^k; raises WindowError outside [lo, hi]."""
    if k < s.lo or k > s.hi:
        raise WindowError(f"z^{k} is outside the exact window [{s.lo}, {s.hi}]")
    return s.coeffs.get(k, 0)


def qt_sum(terms):
    """Sum of QTRat values, or of raw (num, den) QTPoly pairs.

    Terms sharing a denominator are added as polynomials first, so only one
    normalization happens per distinct denominator.
    """
    groups = {}
    for tm in terms:
        if isinstance(tm, QTRat):
            num, den = tm.num, tm.den
        else:
            num, den = tm
        if not num._t:
            continue
        prev = groups.get(den)
        groups[den] = num if prev is None else prev + num
    total = ZERO_QT
    for den, num in groups.items():
        if not num._t:
            continue
        if den._t == ONE._t:
            total = total + QTRat._make(num, ONE)
        else:
            total = total + QTRat(num, den)
    return total


def qt_mul_raw(a, b):
    """Unreduced product of two QTRat values as a (num, den) pair, for qt_sum."""
    if a.den._t == ONE._t:
        return a.num * b.num, b.den
    if b.den._t == ONE._t:
        return a.num * b.num, a.den
    return a.num * b.num, a.den * b.den


class KronLayout:
    """Shared Kronecker packing for integer polynomials with nonnegative exponents.

    Values packed with one layout can be multiplied and added as Python ints
    as long as every result fits: t-degree below ``wb`` and |coefficients|
    below 2^(8*nbytes - 1).
    """

    def __init__(self, qdeg, tdeg, coeff_bound):
        self.wb = tdeg + 1
        self.nslots = (qdeg + 1) * self.wb
        self.nbytes = (int(coeff_bound).bit_length() + 2 + 7) // 8

    def pack(self, p):
        if not p._t:
            return 0
        wb = self.wb
        return _pack(p._t.items(), lambda k: k[0] * wb + k[1], self.nslots, self.nbytes)

    def unpack(self, value):
        out = {}
        for s, c in enumerate(_unpack(value, self.nslots, self.nbytes)):
            if c:
                out[divmod(s, self.wb)] = c
        return QTPoly._raw(out)
