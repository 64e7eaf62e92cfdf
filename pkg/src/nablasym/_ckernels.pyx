# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as _pykernels."""

from libc.stdlib cimport malloc, free, calloc

from ._pykernels import hhl_tables, _reading_positions


cdef struct PFState:
    int n
    int *a
    int *pos
    int *v
    int *used
    int *where
    long long *hist
    int nmask


cdef void _pf_rec(PFState *st, int i, int dinv) nogil:
    cdef int n = st.n
    cdef int c, j, d, mask, low, ai, aj
    if i == n:
        mask = 0
        for c in range(1, n):
            if st.where[c + 1] < st.where[c]:
                mask |= 1 << (c - 1)
        st.hist[dinv * st.nmask + mask] += 1
        return
    ai = st.a[i]
    low = 1
    if i > 0 and ai == st.a[i - 1] + 1:
        low = st.v[i - 1] + 1
    for c in range(low, n + 1):
        if st.used[c]:
            continue
        d = dinv
        for j in range(i):
            aj = st.a[j]
            if aj == ai:
                if st.v[j] < c:
                    d += 1
            elif aj == ai + 1 and st.v[j] > c:
                d += 1
        st.used[c] = 1
        st.v[i] = c
        st.where[c] = st.pos[i]
        _pf_rec(st, i + 1, d)
        st.used[c] = 0


def pf_path_histogram(a_seq):
    cdef PFState st
    cdef int n = len(a_seq)
    cdef int maxd = n * (n - 1) // 2 + 1
    cdef int k, key
    pos = _reading_positions(tuple(a_seq))
    st.n = n
    st.nmask = 1 << (n - 1) if n > 0 else 1
    st.a = <int *> malloc(n * sizeof(int) + 1)
    st.pos = <int *> malloc(n * sizeof(int) + 1)
    st.v = <int *> calloc(n + 1, sizeof(int))
    st.used = <int *> calloc(n + 2, sizeof(int))
    st.where = <int *> calloc(n + 2, sizeof(int))
    st.hist = <long long *> calloc(maxd * st.nmask, sizeof(long long))
    try:
        for k in range(n):
            st.a[k] = a_seq[k]
            st.pos[k] = pos[k]
        with nogil:
            _pf_rec(&st, 0, 0)
        out = {}
        for key in range(maxd * st.nmask):
            if st.hist[key]:
                out[(key // st.nmask, key % st.nmask)] = st.hist[key]
        return out
    finally:
        free(st.a)
        free(st.pos)
        free(st.v)
        free(st.used)
        free(st.where)
        free(st.hist)


def hhl_histogram(mu):
    n, attack, below = hhl_tables(tuple(mu))
    cdef int nn = n
    cdef int na = len(attack)
    cdef int nb = len(below)
    cdef int *ax = <int *> malloc((na + 1) * sizeof(int))
    cdef int *ay = <int *> malloc((na + 1) * sizeof(int))
    cdef int *bu = <int *> malloc((nb + 1) * sizeof(int))
    cdef int *bd = <int *> malloc((nb + 1) * sizeof(int))
    cdef int *bl = <int *> malloc((nb + 1) * sizeof(int))
    cdef int *barm = <int *> malloc((nb + 1) * sizeof(int))
    cdef int *w = <int *> malloc((nn + 1) * sizeof(int))
    cdef int *where = <int *> malloc((nn + 2) * sizeof(int))
    cdef int i, j, k, tmp, inv, maj, mask, c
    cdef int maxinv = na + 1
    cdef int maxmaj = 0
    cdef int nmask = 1 << (nn - 1) if nn > 0 else 1
    cdef long long *hist
    cdef int shift
    try:
        for k in range(na):
            ax[k] = attack[k][0]
            ay[k] = attack[k][1]
        for k in range(nb):
            bu[k] = below[k][0]
            bd[k] = below[k][1]
            bl[k] = below[k][2]
            barm[k] = below[k][3]
            maxmaj += below[k][2]
        shift = 0
        for k in range(nb):
            shift += barm[k]
        # inv can dip by at most the arm total before counting inversions
        hist = <long long *> calloc((maxinv + shift + 1) * (maxmaj + 1) * nmask, sizeof(long long))
        for k in range(nn):
            w[k] = k + 1
        with nogil:
            while True:
                inv = 0
                for k in range(na):
                    if w[ax[k]] > w[ay[k]]:
                        inv += 1
                maj = 0
                for k in range(nb):
                    if w[bu[k]] > w[bd[k]]:
                        maj += bl[k]
                        inv -= barm[k]
                for k in range(nn):
                    where[w[k]] = k
                mask = 0
                for c in range(1, nn):
                    if where[c + 1] < where[c]:
                        mask |= 1 << (c - 1)
                hist[((inv + shift) * (maxmaj + 1) + maj) * nmask + mask] += 1
                # next permutation in lexicographic order
                i = nn - 2
                while i >= 0 and w[i] > w[i + 1]:
                    i -= 1
                if i < 0:
                    break
                j = nn - 1
                while w[j] < w[i]:
                    j -= 1
                tmp = w[i]; w[i] = w[j]; w[j] = tmp
                i += 1
                j = nn - 1
                while i < j:
                    tmp = w[i]; w[i] = w[j]; w[j] = tmp
                    i += 1
                    j -= 1
        out = {}
        for k in range((maxinv + shift + 1) * (maxmaj + 1) * nmask):
            if hist[k]:
                mask = k % nmask
                maj = (k // nmask) % (maxmaj + 1)
                inv = k // nmask // (maxmaj + 1) - shift
                out[(inv, maj, mask)] = hist[k]
        free(hist)
        return out
    finally:
        free(ax); free(ay); free(bu); free(bd); free(bl); free(barm); free(w); free(where)
