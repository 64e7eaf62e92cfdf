"""Partitions, compositions, diagram cell statistics, tableaux and characters.

Partitions and compositions are plain tuples of positive ints.  Diagrams are
French: row 0 is the bottom (longest) row.
"""

from __future__ import annotations

from collections import Counter, namedtuple
from functools import lru_cache
from math import factorial

from .exactalg import QTPoly, ONE

Cell = namedtuple("Cell", "row col arm leg coarm coleg")


def is_partition(lam) -> bool:
    return all(p > 0 for p in lam) and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def as_partition(parts) -> tuple:
    lam = tuple(int(p) for p in parts)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {list(parts)}")
    return lam


def as_composition(parts) -> tuple:
    alpha = tuple(int(p) for p in parts)
    if any(p <= 0 for p in alpha):
        raise ValueError(f"not a composition: {list(parts)}")
    return alpha


def render(parts) -> str:
    return "[" + ",".join(str(p) for p in parts) + "]"


def sort_key(lam):
    """Sort key realizing reverse-lexicographic order within a degree."""
    return (sum(lam), tuple(-p for p in lam))


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def cell_stats(lam):
    lamc = conjugate(lam)
    cells = []
    for r, row in enumerate(lam):
        for c in range(row):
            cells.append(Cell(r, c, row - c - 1, lamc[c] - r - 1, c, r))
    return cells


def nstat(lam) -> int:
    return sum(i * p for i, p in enumerate(lam))


def Tmu(lam) -> QTPoly:
    return QTPoly.monomial(nstat(conjugate(lam)), nstat(lam))


def wmu(lam) -> QTPoly:
    out = ONE
    for c in cell_stats(lam):
        out = out * (QTPoly.monomial(c.arm, 0) - QTPoly.monomial(0, c.leg + 1))
        out = out * (QTPoly.monomial(0, c.leg) - QTPoly.monomial(c.arm + 1, 0))
    return out


def wmu_factors(lam):
    """The 2|lam| binomial factors of w_mu as (sign, i, j) meaning sign*(q^i - t^j)."""
    out = []
    for c in cell_stats(lam):
        out.append((1, c.arm, c.leg + 1))
        out.append((-1, c.arm + 1, c.leg))
    return out


def multiplicities(lam):
    return Counter(lam)


@lru_cache(maxsize=None)
def zlambda(lam) -> int:
    out = 1
    for i, m in Counter(lam).items():
        out *= i ** m * factorial(m)
    return out


def sign_eps(lam) -> int:
    """(-1)^(|lam| - l(lam))."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


@lru_cache(maxsize=None)
def _partitions(n, maxpart):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n):
    """Partitions of n in reverse-lexicographic order."""
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _compositions(n):
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_compositions(n):
    """Compositions of n in lexicographic order; the empty one for n = 0."""
    return list(_compositions(n))


def sub_multisets(lam):
    """All sub-multisets of a partition, as partitions."""
    items = sorted(Counter(lam).items(), reverse=True)
    out = [()]
    for part, m in items:
        out = [a + (part,) * k for a in out for k in range(m + 1)]
    return [tuple(sorted(a, reverse=True)) for a in out]


def multiset_diff(lam, mu):
    c = Counter(lam)
    c.subtract(mu)
    if any(v < 0 for v in c.values()):
        return None
    return tuple(sorted(c.elements(), reverse=True))


def union(lam, mu):
    return tuple(sorted(lam + mu, reverse=True))


# -- tableaux --------------------------------------------------------------


@lru_cache(maxsize=None)
def syt_descents(lam):
    """Map descent set (frozenset) -> number of SYT of shape lam with that descent set.

    i is a descent when i+1 sits in a strictly higher row than i.
    """
    n = sum(lam)
    counts = Counter()
    filled = [0] * len(lam)
    rowof = [0] * (n + 1)

    def place(k):
        if k > n:
            counts[frozenset(i for i in range(1, n) if rowof[i + 1] > rowof[i])] += 1
            return
        for r in range(len(lam)):
            if filled[r] < lam[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                rowof[k] = r
                place(k + 1)
                filled[r] -= 1

    place(1)
    return dict(counts)


def count_syt(lam) -> int:
    n = sum(lam)
    hooks = 1
    for c in cell_stats(lam):
        hooks *= c.arm + c.leg + 1
    return factorial(n) // hooks


# -- characters ------------------------------------------------------------


def _rim_hooks(lam, k):
    """(new partition, height) for every border strip of size k removable from lam."""
    # beta-numbers: removing a k-strip moves one bead from x to x-k
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    out = []
    for i, x in enumerate(beta):
        y = x - k
        if y < 0 or y in bset:
            continue
        height = sum(1 for b in beta if y < b < x)
        nb = sorted([b for b in beta if b != x] + [y], reverse=True)
        new = tuple(nb[j] - (m - 1 - j) for j in range(m))
        out.append((tuple(p for p in new if p > 0), height))
    return out


@lru_cache(maxsize=None)
def mn_character(lam, mu) -> int:
    """chi^lam evaluated at cycle type mu (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must have the same size")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    total = 0
    for new, height in _rim_hooks(lam, k):
        total += (-1) ** height * mn_character(new, rest)
    return total


# -- permutations ----------------------------------------------------------


def descents(word):
    """Positions i (1-based) with word[i-1] > word[i]."""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def inverse_perm(sigma):
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v - 1] = i + 1
    return tuple(inv)


def binom(n, k) -> int:
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]
