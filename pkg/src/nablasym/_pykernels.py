"""Pure-Python enumeration kernels (fallback for the compiled module)."""

from itertools import permutations


def _reading_positions(a_seq):
    n = len(a_seq)
    order = sorted(range(n), key=lambda i: (-a_seq[i], -i))
    pos = [0] * n
    for k, i in enumerate(order):
        pos[i] = k
    return pos


def car_assignments(a_seq):
    """All car labelings of the Dyck path a_seq, in lexicographic order."""
    n = len(a_seq)
    used = [False] * (n + 1)
    v = [0] * n

    def rec(i):
        if i == n:
            yield tuple(v)
            return
        low = v[i - 1] + 1 if i and a_seq[i] == a_seq[i - 1] + 1 else 1
        for c in range(low, n + 1):
            if not used[c]:
                used[c] = True
                v[i] = c
                yield from rec(i + 1)
                used[c] = False

    yield from rec(0)


def pf_stats_raw(a_seq, v):
    """(dinv, ides_mask, reading word) of one parking function."""
    n = len(a_seq)
    dinv = 0
    for j in range(n):
        for i in range(j):
            if a_seq[i] == a_seq[j] and v[i] < v[j]:
                dinv += 1
            elif a_seq[i] == a_seq[j] + 1 and v[i] > v[j]:
                dinv += 1
    pos = _reading_positions(a_seq)
    sigma = [0] * n
    where = [0] * (n + 1)
    for i in range(n):
        sigma[pos[i]] = v[i]
        where[v[i]] = pos[i]
    mask = 0
    for c in range(1, n):
        if where[c + 1] < where[c]:
            mask |= 1 << (c - 1)
    return dinv, mask, tuple(sigma)


def pf_path_histogram(a_seq):
    """{(dinv, ides_mask): count} over all car labelings of one Dyck path."""
    a_seq = tuple(a_seq)
    n = len(a_seq)
    pos = _reading_positions(a_seq)
    hist = {}
    used = [False] * (n + 1)
    v = [0] * n
    where = [0] * (n + 1)

    def rec(i, dinv):
        if i == n:
            mask = 0
            for c in range(1, n):
                if where[c + 1] < where[c]:
                    mask |= 1 << (c - 1)
            key = (dinv, mask)
            hist[key] = hist.get(key, 0) + 1
            return
        ai = a_seq[i]
        low = v[i - 1] + 1 if i and ai == a_seq[i - 1] + 1 else 1
        for c in range(low, n + 1):
            if used[c]:
                continue
            d = dinv
            for j in range(i):
                aj = a_seq[j]
                if aj == ai:
                    if v[j] < c:
                        d += 1
                elif aj == ai + 1 and v[j] > c:
                    d += 1
            used[c] = True
            v[i] = c
            where[c] = pos[i]
            rec(i + 1, d)
            used[c] = False

    rec(0, 0)
    return hist


def hhl_tables(mu):
    """Reading-order cell data for the filling statistics of shape mu."""
    cells = []
    for r in range(len(mu) - 1, -1, -1):
        for c in range(mu[r]):
            cells.append((r, c))
    index = {cell: k for k, cell in enumerate(cells)}
    colh = [sum(1 for p in mu if p > c) for c in range(mu[0])] if mu else []
    attack = []
    for x in range(len(cells)):
        for y in range(x + 1, len(cells)):
            (r1, c1), (r2, c2) = cells[x], cells[y]
            if r1 == r2 or (r1 == r2 + 1 and c1 > c2):
                attack.append((x, y))
    below = []
    for (r, c), k in index.items():
        if r > 0:
            arm = mu[r] - c - 1
            leg = colh[c] - r - 1
            below.append((k, index[(r - 1, c)], leg + 1, arm))
    return len(cells), attack, below


def hhl_histogram(mu):
    """{(inv, maj, ides_mask): count} over all bijective fillings of mu."""
    n, attack, below = hhl_tables(tuple(mu))
    hist = {}
    for w in permutations(range(1, n + 1)):
        inv = 0
        for x, y in attack:
            if w[x] > w[y]:
                inv += 1
        maj = 0
        for u, d, legp1, arm in below:
            if w[u] > w[d]:
                maj += legp1
                inv -= arm
        where = [0] * (n + 1)
        for k, c in enumerate(w):
            where[c] = k
        mask = 0
        for c in range(1, n):
            if where[c + 1] < where[c]:
                mask |= 1 << (c - 1)
        key = (inv, maj, mask)
        hist[key] = hist.get(key, 0) + 1
    return hist
