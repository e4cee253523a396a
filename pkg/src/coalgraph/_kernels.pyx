# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Must return exactly what ``_kernels_py`` returns."""

from libc.stdint cimport uint64_t

BACKEND = "cython"

cdef enum:
    MAXV = 63


cdef struct CanonState:
    int n
    uint64_t adj[MAXV]
    uint64_t best[MAXV]
    int order[MAXV]
    int best_order[MAXV]


cdef uint64_t INF = (<uint64_t>1) << 62


cdef void _canon_dfs(CanonState* st, int j, uint64_t used) nogil:
    cdef int n = st.n
    cdef int v, i, q
    cdef uint64_t row, col, b
    for v in range(n):
        if (used >> v) & 1:
            continue
        row = st.adj[v]
        col = 0
        for i in range(j):
            col = (col << 1) | ((row >> st.order[i]) & 1)
        b = st.best[j]
        if col > b:
            continue
        st.order[j] = v
        if col < b:
            st.best[j] = col
            for q in range(j + 1, n):
                st.best[q] = INF
            if j == n - 1:
                for q in range(n):
                    st.best_order[q] = st.order[q]
        if j < n - 1:
            _canon_dfs(st, j + 1, used | ((<uint64_t>1) << v))


def canonical_order(adj, int n):
    if n < 0 or n > MAXV:
        raise ValueError(f"kernel supports 0 <= n <= {MAXV}")
    if n == 0:
        return []
    cdef CanonState st
    cdef int v
    st.n = n
    for v in range(n):
        st.adj[v] = <uint64_t>adj[v]
        st.best[v] = INF
        st.best_order[v] = v
    with nogil:
        _canon_dfs(&st, 0, 0)
    return [st.best_order[v] for v in range(n)]


cdef struct SearchState:
    int n
    uint64_t full
    uint64_t closed[MAXV]
    uint64_t cov[MAXV + 1]
    int rgs[MAXV]
    int best_parts
    int best_pairs
    int parts_rgs[MAXV]
    int pairs_rgs[MAXV]
    long long examined


cdef void _leaf(SearchState* st, int nb) nogil:
    cdef int nondom[MAXV + 1]
    cdef int k = 0
    cdef int b, x, y, pairs = 0
    cdef uint64_t partnered = 0, cx, full = st.full
    st.examined += 1
    for b in range(nb):
        if st.cov[b] != full:
            nondom[k] = b
            k += 1
    for x in range(k):
        cx = st.cov[nondom[x]]
        for y in range(x + 1, k):
            if (cx | st.cov[nondom[y]]) == full:
                pairs += 1
                partnered |= ((<uint64_t>1) << x) | ((<uint64_t>1) << y)
    if k > 0 and partnered != ((((<uint64_t>1) << (k - 1)) << 1) - 1):
        return
    if nb > st.best_parts:
        st.best_parts = nb
        for b in range(st.n):
            st.parts_rgs[b] = st.rgs[b]
    if pairs > st.best_pairs:
        st.best_pairs = pairs
        for b in range(st.n):
            st.pairs_rgs[b] = st.rgs[b]


cdef void _search(SearchState* st, int v, int nb) nogil:
    cdef int b
    cdef uint64_t c, nc, cv, full = st.full
    if v == st.n:
        _leaf(st, nb)
        return
    cv = st.closed[v]
    for b in range(nb):
        c = st.cov[b]
        if c == full:
            continue
        nc = c | cv
        if nc == full:
            continue
        st.cov[b] = nc
        st.rgs[v] = b
        _search(st, v + 1, nb)
        st.cov[b] = c
    st.cov[nb] = cv
    st.rgs[v] = nb
    _search(st, v + 1, nb + 1)
    st.cov[nb] = 0


def search_partitions(closed, int n):
    if n < 0 or n > MAXV:
        raise ValueError(f"kernel supports 0 <= n <= {MAXV}")
    cdef SearchState st
    cdef int v
    st.n = n
    st.full = (((<uint64_t>1) << n) - 1) if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    for v in range(n):
        st.closed[v] = <uint64_t>closed[v]
    for v in range(n + 1):
        st.cov[v] = 0
    st.best_parts = -1
    st.best_pairs = -1
    st.examined = 0
    with nogil:
        _search(&st, 0, 0)
    parts_rgs = tuple(st.parts_rgs[v] for v in range(n)) if st.best_parts >= 0 else None
    pairs_rgs = tuple(st.pairs_rgs[v] for v in range(n)) if st.best_pairs >= 0 else None
    return st.best_parts, parts_rgs, st.best_pairs, pairs_rgs, st.examined
