"""Parking functions, their statistics, and fundamental-basis generating functions.

A parking function is stored as rows (a_i, v_i), bottom to top: a_i is the
number of full cells between the path and the diagonal in row i and v_i the
car in that row.
"""

from __future__ import annotations

import csv
import io
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

from . import combinat as cb
from .exactalg import ONE, QTPoly
from .kernels import car_assignments, pf_path_histogram, pf_stats_raw
from .symfun import FundVector

PFStats = namedtuple("PFStats", "area dinv touch ret sigma ides")


class ParkingFunction:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple((int(a), int(v)) for a, v in rows)
        _validate(rows)
        self.rows = rows

    @property
    def n(self):
        return len(self.rows)

    @property
    def area_seq(self):
        return tuple(a for a, _ in self.rows)

    @property
    def cars(self):
        return tuple(v for _, v in self.rows)

    def __eq__(self, other):
        return isinstance(other, ParkingFunction) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ParkingFunction({list(self.rows)})"


def _validate(rows):
    n = len(rows)
    if n == 0:
        raise ValueError("a parking function needs at least one row")
    if rows[0][0] != 0:
        raise ValueError("first row must have area letter 0")
    for i in range(n - 1):
        a0, v0 = rows[i]
        a1, v1 = rows[i + 1]
        if a1 < 0 or a1 > a0 + 1:
            raise ValueError(f"row {i + 2}: area letter {a1} breaks the Dyck condition")
        if a1 == a0 + 1 and v1 <= v0:
            raise ValueError(f"row {i + 2}: cars in a column must increase")
    if sorted(v for _, v in rows) != list(range(1, n + 1)):
        raise ValueError("cars must be exactly 1..n")


def is_dyck(a_seq):
    return bool(a_seq) and a_seq[0] == 0 and all(
        0 <= a_seq[i + 1] <= a_seq[i] + 1 for i in range(len(a_seq) - 1))


def dyck_paths(n, touch=None):
    """Area sequences of size n in lexicographic order, optionally with a fixed touch composition."""
    if touch is not None:
        touch = cb.as_composition(touch)
        if sum(touch) != n:
            return
        yield from _paths_with_touch(touch)
        return
    seq = [0] * n

    def rec(i):
        if i == n:
            yield tuple(seq)
            return
        for a in range(0, seq[i - 1] + 2):
            seq[i] = a
            yield from rec(i + 1)

    if n == 0:
        yield ()
        return
    yield from rec(1)


def _primitive(m):
    """Area sequences of size m touching the diagonal only at the start."""
    for d in dyck_paths(m - 1):
        yield (0,) + tuple(x + 1 for x in d)


def _paths_with_touch(alpha):
    if not alpha:
        yield ()
        return
    for head in _primitive(alpha[0]):
        for tail in _paths_with_touch(alpha[1:]):
            yield head + tail


def enumerate_pf(n, touch=None):
    """Stream all parking functions of size n (lexicographic by path, then cars)."""
    for a_seq in dyck_paths(n, touch):
        for v in car_assignments(a_seq):
            pf = ParkingFunction.__new__(ParkingFunction)
            pf.rows = tuple(zip(a_seq, v))
            yield pf


def touch_of(a_seq):
    zeros = [i for i, a in enumerate(a_seq) if a == 0]
    zeros.append(len(a_seq))
    return tuple(zeros[i + 1] - zeros[i] for i in range(len(zeros) - 1))


def mask_to_set(mask, n):
    return frozenset(i + 1 for i in range(n - 1) if mask >> i & 1)


def stats(P):
    a_seq, v = P.area_seq, P.cars
    dinv, mask, sigma = pf_stats_raw(a_seq, v)
    tch = touch_of(a_seq)
    return PFStats(sum(a_seq), dinv, tch, tch[0], sigma, mask_to_set(mask, len(a_seq)))


def touches(a_seq, j):
    """Whether the path passes through the diagonal point (j, j)."""
    n = len(a_seq)
    if j == 0 or j == n:
        return True
    return a_seq[j] == 0


def qpoly(n, k, P):
    """k+1 plus q^(n-i) for i = 1, 2, ... while the path avoids (n-i, n-i), i < n."""
    a_seq = P.area_seq if isinstance(P, ParkingFunction) else tuple(P)
    out = {(0, 0): k + 1}
    for i in range(1, n):
        j = n - i
        if touches(a_seq, j):
            break
        out[(j, 0)] = out.get((j, 0), 0) + 1
    return QTPoly(out)


def erun(alpha):
    r = 0
    for p in alpha:
        if p % 2:
            break
        r += 1
    return r


def _path_chunk(args):
    paths, = args
    return [(a_seq, pf_path_histogram(a_seq)) for a_seq in paths]


def path_histograms(n, touch=None, threads=1):
    paths = list(dyck_paths(n, touch))
    if threads <= 1 or len(paths) < 64:
        for a_seq in paths:
            yield a_seq, pf_path_histogram(a_seq)
        return
    chunks = [paths[i::threads * 4] for i in range(threads * 4)]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        results = list(ex.map(_path_chunk, [(c,) for c in chunks if c]))
    for chunk in results:
        yield from chunk


def pf_genfun(n, touch=None, weight=None, path_weight=None, threads=1):
    """sum w(P) q^dinv t^area F_ides over PF_n (optionally only touch(P) = touch).

    ``path_weight(a_seq)`` is a QTPoly depending only on the Dyck path (fast);
    ``weight(P)`` may depend on the whole parking function (enumerates cars).
    """
    if weight is not None:
        return _pf_genfun_slow(n, touch, weight)
    groups = {}
    for a_seq, hist in path_histograms(n, touch, threads):
        area = sum(a_seq)
        w = path_weight(a_seq) if path_weight is not None else ONE
        if not w:
            continue
        bucket = groups.setdefault(w, {})
        for (dinv, mask), cnt in hist.items():
            d = bucket.setdefault(mask, {})
            d[(dinv, area)] = d.get((dinv, area), 0) + cnt
    out = {}
    for w, bucket in groups.items():
        for mask, d in bucket.items():
            term = QTPoly(d) * w
            out[mask] = out[mask] + term if mask in out else term
    return FundVector(n, {mask_to_set(mask, n): c for mask, c in out.items()})


def _pf_genfun_slow(n, touch, weight):
    out = {}
    for P in enumerate_pf(n, touch):
        st = stats(P)
        term = QTPoly.monomial(st.dinv, st.area) * weight(P)
        out[st.ides] = out[st.ides] + term if st.ides in out else term
    return FundVector(n, out)


def pf_csv(n, touch=None, out=None):
    """CSV dump: n, rows, area, dinv, touch, sigma, ides."""
    buf = out if out is not None else io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "rows", "area", "dinv", "touch", "sigma", "ides"])
    for P in enumerate_pf(n, touch):
        st = stats(P)
        w.writerow([
            n,
            "[" + ",".join(f"{a}:{v}" for a, v in P.rows) + "]",
            st.area,
            st.dinv,
            cb.render(st.touch),
            cb.render(st.sigma),
            cb.render(sorted(st.ides)),
        ])
    return buf.getvalue() if out is None else None


def find_pf(n, sigma=None, area=None, touch=None):
    """All P in PF_n with the given reading word / area / touch."""
    hits = []
    for a_seq in dyck_paths(n, touch):
        if area is not None and sum(a_seq) != area:
            continue
        for v in car_assignments(a_seq):
            P = ParkingFunction(tuple(zip(a_seq, v)))
            st = stats(P)
            if sigma is None or st.sigma == tuple(sigma):
                hits.append((P, st))
    return hits
