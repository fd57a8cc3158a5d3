# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical labeling search; same contract as ``_canon_py.search``.

Blocks are 1024-bit sets (16 words) indexed by relabeled masks, so
``n <= 10``. The search runs without the GIL.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

cdef enum:
    MAXN = 10
    MAXF = 1024
    WORDS = 16

cdef struct State:
    int n
    int nfam
    int need[MAXN]
    int color[MAXN]
    int twin_prev[MAXN]
    int size[MAXF]
    int pm[MAXF]
    int cnt[MAXF]
    int ncont[MAXN]
    int cont[MAXN][MAXF]
    int pos[MAXN]
    int best_pos[MAXN]
    uint64_t cur[MAXN][WORDS]
    uint64_t best[MAXN][WORDS]
    int have_best


cdef inline int cmp_block(uint64_t* a, uint64_t* b) noexcept nogil:
    cdef int w
    for w in range(WORDS - 1, -1, -1):
        if a[w] != b[w]:
            return 1 if a[w] > b[w] else -1
    return 0


cdef int cmp_prefix(State* s, int m) noexcept nogil:
    cdef int i, c
    for i in range(m):
        c = cmp_block(s.cur[i], s.best[i])
        if c:
            return c
    return 0


cdef void dfs(State* s, int m, int assigned) noexcept nogil:
    cdef int p, t, j, k, c
    cdef int bit
    cdef uint64_t* blk
    if m == s.n:
        if not s.have_best or cmp_prefix(s, s.n) > 0:
            memcpy(s.best, s.cur, sizeof(s.cur))
            memcpy(s.best_pos, s.pos, sizeof(s.pos))
            s.have_best = 1
        return
    c = s.need[m]
    bit = 1 << m
    blk = s.cur[m]
    for p in range(s.n):
        if (assigned >> p) & 1 or s.color[p] != c:
            continue
        t = s.twin_prev[p]
        if t >= 0 and not (assigned >> t) & 1:
            continue
        memset(blk, 0, WORDS * sizeof(uint64_t))
        for k in range(s.ncont[p]):
            j = s.cont[p][k]
            s.pm[j] |= bit
            s.cnt[j] += 1
            if s.cnt[j] == s.size[j]:
                blk[s.pm[j] >> 6] |= (<uint64_t>1) << (s.pm[j] & 63)
        if (not s.have_best or cmp_block(blk, s.best[m]) >= 0
                or cmp_prefix(s, m) != 0):
            s.pos[p] = m
            dfs(s, m + 1, assigned | (1 << p))
            s.pos[p] = -1
        for k in range(s.ncont[p]):
            j = s.cont[p][k]
            s.pm[j] &= ~bit
            s.cnt[j] -= 1


def search(int n, family, color, twin_prev):
    cdef State* s
    cdef int i, j, f, nf
    if n > MAXN:
        raise ValueError("compiled kernel supports n <= 10")
    fam = [x for x in family if x]
    if len(fam) > MAXF:
        raise ValueError("family too large for compiled kernel")
    s = <State*>malloc(sizeof(State))
    if s == NULL:
        raise MemoryError()
    memset(s, 0, sizeof(State))
    s.n = n
    s.nfam = len(fam)
    need = sorted(color)
    for i in range(n):
        s.need[i] = need[i]
        s.color[i] = color[i]
        s.twin_prev[i] = twin_prev[i]
        s.pos[i] = -1
    for j in range(s.nfam):
        f = fam[j]
        s.size[j] = bin(f).count("1")
        for i in range(n):
            if (f >> i) & 1:
                s.cont[i][s.ncont[i]] = j
                s.ncont[i] += 1
    try:
        with nogil:
            dfs(s, 0, 0)
        return [s.best_pos[i] for i in range(n)]
    finally:
        free(s)
