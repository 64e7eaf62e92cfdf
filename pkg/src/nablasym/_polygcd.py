"""Dense polynomial gcd over Z and Z[t] by the subresultant remainder sequence.

Univariate polynomials are lists of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is the empty list.  Bivariate polynomials
are univariate polynomials in q whose coefficients are univariate polynomials
in t (the ring Z[t][q]).
"""

from math import gcd as _igcd


class _IntRing:
    zero = 0
    one = 1

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def divexact(a, b):
        quo, rem = divmod(a, b)
        if rem:
            raise ArithmeticError("inexact integer division")
        return quo

    @staticmethod
    def gcd(a, b):
        return _igcd(a, b)

    @staticmethod
    def normal(a):
        return -a if a < 0 else a


class _UniRing:
    """Z[t] with elements as coefficient lists."""

    zero = []
    one = [1]

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def add(a, b):
        return uadd(a, b)

    @staticmethod
    def sub(a, b):
        return usub(a, b)

    @staticmethod
    def mul(a, b):
        return umul(a, b)

    @staticmethod
    def divexact(a, b):
        return udivexact(a, b)

    @staticmethod
    def gcd(a, b):
        return ugcd(a, b)

    @staticmethod
    def normal(a):
        return uneg(a) if a and a[-1] < 0 else a


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def uadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def uneg(a):
    return [-c for c in a]


def usub(a, b):
    return uadd(a, uneg(b))


def umul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def uscale(a, c):
    if not c:
        return []
    return [c * x for x in a]


def ucontent(a):
    g = 0
    for c in a:
        g = _igcd(g, c)
        if g == 1:
            break
    return g


def udivexact(a, b):
    """Exact quotient a / b in Z[t]; raises ArithmeticError if b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    if len(b) == 1:
        return [_IntRing.divexact(c, b[0]) for c in a]
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(rem) - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        qc, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quo[k - db] = qc
        for j, y in enumerate(b):
            rem[k - db + j] -= qc * y
    if any(rem[:db]):
        raise ArithmeticError("inexact polynomial division")
    return _trim(quo)


# -- generic polynomials over a ring -------------------------------------


def _p_trim(R, a):
    while a and R.is_zero(a[-1]):
        a.pop()
    return a


def _p_scale(R, a, c):
    return _p_trim(R, [R.mul(x, c) for x in a])


def _p_prem(R, a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [R.mul(lb, x) for x in r]
        for j, y in enumerate(b):
            r[shift + j] = R.sub(r[shift + j], R.mul(lr, y))
        _p_trim(R, r)
        e -= 1
    if e > 0 and r:
        f = R.one
        for _ in range(e):
            f = R.mul(f, lb)
        r = _p_scale(R, r, f)
    return r


def _p_content(R, a):
    g = R.zero
    for c in a:
        g = R.gcd(g, c)
        if g == R.one:
            break
    return R.normal(g)


def _p_divexact_scalar(R, a, c):
    return [R.divexact(x, c) for x in a]


def _ring_pow(R, x, e):
    out = R.one
    for _ in range(e):
        out = R.mul(out, x)
    return out


def _p_gcd(R, a, b):
    if not a:
        return list(b)
    if not b:
        return list(a)
    if len(a) < len(b):
        a, b = b, a
    ca, cb = _p_content(R, a), _p_content(R, b)
    d = R.gcd(ca, cb)
    a = _p_divexact_scalar(R, a, ca)
    b = _p_divexact_scalar(R, b, cb)
    g = h = R.one
    while True:
        delta = len(a) - len(b)
        r = _p_prem(R, a, b)
        if not r:
            break
        if len(r) == 1:
            b = [R.one]
            break
        a, b = b, _p_divexact_scalar(R, r, R.mul(g, _ring_pow(R, h, delta)))
        g = a[-1]
        if delta:
            h = R.divexact(_ring_pow(R, g, delta), _ring_pow(R, h, delta - 1))
    cb = _p_content(R, b)
    b = _p_divexact_scalar(R, b, cb)
    return [R.mul(d, x) for x in b]


def ugcd(a, b):
    """Primitive-normalized gcd in Z[t] (positive leading coefficient)."""
    if not a and not b:
        return []
    g = _p_gcd(_IntRing, list(a), list(b))
    return uneg(g) if g[-1] < 0 else g


def bgcd(a, b):
    """Gcd in Z[t][q] of two dense bivariate polynomials, up to sign."""
    return _p_gcd(_UniRing, [list(c) for c in a], [list(c) for c in b])
