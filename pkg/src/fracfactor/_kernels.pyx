# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_kernels_py``."""

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64) nogil

cdef enum:
    MAXN = 62


cdef inline bint next_comb(int* idx, int k, int c) nogil:
    cdef int i = k - 1
    cdef int j
    while i >= 0 and idx[i] == c - k + i:
        i -= 1
    if i < 0:
        return False
    idx[i] += 1
    for j in range(i + 1, k):
        idx[j] = idx[j - 1] + 1
    return True


cdef int _load(int n, adj, hadj, a, b, u64* cadj, u64* chadj, i64* ca, i64* cb) except -1:
    cdef int x
    if n > MAXN:
        raise ValueError("kernels support at most %d vertices" % MAXN)
    for x in range(n):
        cadj[x] = adj[x]
        chadj[x] = hadj[x]
        ca[x] = a[x]
        cb[x] = b[x]
    return 0


cdef inline int _per_vertex(int n, u64* cadj, u64* chadj, i64* cb, u64 smask,
                            int* rest, i64* cost) nogil:
    cdef int x, nr = 0
    for x in range(n):
        if not (smask >> x) & 1:
            rest[nr] = x
            cost[nr] = popcount(cadj[x] & ~smask) + popcount(chadj[x] & smask) - cb[x]
            nr += 1
    return nr


def scan_pairs(int n, adj, hadj, a, b):
    cdef u64 cadj[MAXN]
    cdef u64 chadj[MAXN]
    cdef i64 ca[MAXN]
    cdef i64 cb[MAXN]
    cdef i64 cost[MAXN]
    cdef int rest[MAXN]
    cdef int sidx[MAXN]
    cdef int tidx[MAXN]
    cdef int ks, kt, i, nr
    cdef u64 smask, tmask
    cdef i64 base, val
    cdef i64 examined = 0
    _load(n, adj, hadj, a, b, cadj, chadj, ca, cb)
    with nogil:
        for ks in range(n + 1):
            for i in range(ks):
                sidx[i] = i
            while True:
                smask = 0
                base = 0
                for i in range(ks):
                    smask |= (<u64>1) << sidx[i]
                    base += ca[sidx[i]]
                nr = _per_vertex(n, cadj, chadj, cb, smask, rest, cost)
                for kt in range(nr + 1):
                    for i in range(kt):
                        tidx[i] = i
                    while True:
                        examined += 1
                        val = base
                        for i in range(kt):
                            val += cost[tidx[i]]
                        if val < 0:
                            tmask = 0
                            for i in range(kt):
                                tmask |= (<u64>1) << rest[tidx[i]]
                            with gil:
                                return int(smask), int(tmask), int(val), int(examined)
                        if not next_comb(tidx, kt, nr):
                            break
                if not next_comb(sidx, ks, n):
                    break
    return -1, 0, 0, int(examined)


def scan_min_t(int n, adj, hadj, a, b):
    cdef u64 cadj[MAXN]
    cdef u64 chadj[MAXN]
    cdef i64 ca[MAXN]
    cdef i64 cb[MAXN]
    cdef i64 cost[MAXN]
    cdef int rest[MAXN]
    cdef int sidx[MAXN]
    cdef int ks, i, nr
    cdef u64 smask, tmask
    cdef i64 val
    cdef i64 examined = 0
    _load(n, adj, hadj, a, b, cadj, chadj, ca, cb)
    with nogil:
        for ks in range(n + 1):
            for i in range(ks):
                sidx[i] = i
            while True:
                smask = 0
                val = 0
                for i in range(ks):
                    smask |= (<u64>1) << sidx[i]
                    val += ca[sidx[i]]
                nr = _per_vertex(n, cadj, chadj, cb, smask, rest, cost)
                examined += 1
                tmask = 0
                for i in range(nr):
                    if cost[i] < 0:
                        tmask |= (<u64>1) << rest[i]
                        val += cost[i]
                if val < 0:
                    with gil:
                        return int(smask), int(tmask), int(val), int(examined)
                if not next_comb(sidx, ks, n):
                    break
    return -1, 0, 0, int(examined)
