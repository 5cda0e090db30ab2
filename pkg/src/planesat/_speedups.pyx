# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see planesat._purepy for the reference semantics.

Only graphs with at most 64 vertices are handled here (uint64 bitmasks);
planesat.kernels falls back to the pure-Python code above that size.
"""
from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

MAX_N = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(u64 x) nogil:
    return __builtin_popcountll(x)


cdef bint next_perm(int* a, int lo, int hi) nogil:
    # lexicographic next permutation of a[lo:hi]; on wrap restores ascending order
    cdef int i = hi - 2, j, t, k, l
    while i >= lo and a[i] >= a[i + 1]:
        i -= 1
    if i < lo:
        k = lo
        l = hi - 1
        while k < l:
            t = a[k]; a[k] = a[l]; a[l] = t
            k += 1; l -= 1
        return False
    j = hi - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    k = i + 1
    l = hi - 1
    while k < l:
        t = a[k]; a[k] = a[l]; a[l] = t
        k += 1; l -= 1
    return True


cdef int trace(int n, int* off, int* nbr, int* twin, char* seen, u64* masks) nogil:
    cdef int total = off[n], i, j, w, v, d, f = 0, start, cur
    cdef u64 m
    for i in range(total):
        seen[i] = 0
    for v in range(n):
        for i in range(off[v], off[v + 1]):
            w = nbr[i]
            twin[i] = -1
            for j in range(off[w], off[w + 1]):
                if nbr[j] == v:
                    twin[i] = j
                    break
    for start in range(total):
        if seen[start]:
            continue
        m = 0
        cur = start
        while not seen[cur]:
            seen[cur] = 1
            # tail of dart cur is the vertex owning slot cur
            v = owner_of(n, off, cur)
            m |= (<u64>1) << v
            j = twin[cur]
            w = nbr[cur]
            d = off[w + 1] - off[w]
            cur = off[w] + (j - off[w] + 1) % d
        masks[f] = m
        f += 1
    return f


cdef inline int owner_of(int n, int* off, int slot) nogil:
    cdef int lo = 0, hi = n, mid
    # largest v with off[v] <= slot and off[v+1] > slot
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if off[mid] <= slot:
            lo = mid
        else:
            hi = mid
    while off[lo + 1] <= slot:
        lo += 1
    return lo


def rotation_classes(int n, adj):
    if n > MAX_N:
        raise ValueError("compiled kernel supports n <= 64")
    cdef int v, i, k, total = 0, nverts = 0, want, f, nvar = 0, idx
    for v in range(n):
        total += len(adj[v])
        if len(adj[v]):
            nverts += 1
    want = total // 2 - nverts + 2
    cdef int* off = <int*> malloc((n + 1) * sizeof(int))
    cdef int* nbr = <int*> malloc((total + 1) * sizeof(int))
    cdef int* twin = <int*> malloc((total + 1) * sizeof(int))
    cdef char* seen = <char*> malloc((total + 1) * sizeof(char))
    cdef u64* masks = <u64*> malloc((total + 1) * sizeof(u64))
    cdef int* var = <int*> malloc((n + 1) * sizeof(int))
    classes = {}
    cdef long long tried = 0
    try:
        k = 0
        for v in range(n):
            off[v] = k
            for w in adj[v]:
                nbr[k] = w
                k += 1
            if len(adj[v]) >= 3:
                var[nvar] = v
                nvar += 1
        off[n] = k
        while True:
            tried += 1
            f = trace(n, off, nbr, twin, seen, masks)
            if f == want:
                key = tuple(sorted([masks[i] for i in range(f)]))
                if key not in classes:
                    rot = {}
                    for v in range(n):
                        if off[v + 1] > off[v]:
                            rot[v] = tuple([nbr[i] for i in range(off[v], off[v + 1])])
                    classes[key] = rot
            idx = nvar - 1
            while idx >= 0:
                v = var[idx]
                if next_perm(nbr, off[v] + 1, off[v + 1]):
                    break
                idx -= 1
            if idx < 0:
                break
    finally:
        free(off); free(nbr); free(twin); free(seen); free(masks); free(var)
    return classes, tried


cdef struct Ctx:
    int n
    u64* hadj
    u64* gadj
    u64* base
    int* order
    int* rank
    int* hosts
    int* sigma
    int split


cdef u64 domain(Ctx* c, int x, u64 used) nogil:
    cdef u64 d = c.base[x] & ~used
    cdef u64 nb = c.hadj[x]
    cdef int h
    while nb:
        h = __builtin_ctzll(nb)
        nb &= nb - 1
        if c.rank[h] < c.rank[x] and c.sigma[h] >= 0:
            d &= c.gadj[c.sigma[h]]
    return d


cdef bint augment(int i, u64* doms, int* owner, u64* seen) nogil:
    cdef u64 d = doms[i] & ~seen[0]
    cdef int y
    while d:
        y = __builtin_ctzll(d)
        d &= d - 1
        seen[0] |= (<u64>1) << y
        if owner[y] < 0 or augment(owner[y], doms, owner, seen):
            owner[y] = i
            return True
    return False


cdef bint match_rest(Ctx* c, int start, u64 used) nogil:
    cdef int m = c.n - start, i, y
    cdef u64 doms[64]
    cdef int owner[64]
    cdef u64 seen
    for y in range(c.n):
        owner[y] = -1
    for i in range(m):
        doms[i] = domain(c, c.order[start + i], used)
        if doms[i] == 0:
            return False
    for i in range(m):
        seen = 0
        if not augment(i, doms, owner, &seen):
            return False
    for y in range(c.n):
        if owner[y] >= 0:
            c.sigma[c.order[start + owner[y]]] = y
    return True


cdef bint rec(Ctx* c, int i, u64 used) nogil:
    if i >= c.split:
        return match_rest(c, i, used)
    cdef int x = c.order[i], k, y, z
    cdef u64 dom = domain(c, x, used), nused, nb
    cdef bint ok
    if dom == 0:
        return False
    for k in range(c.n):
        y = c.hosts[k]
        if not ((dom >> y) & 1):
            continue
        c.sigma[x] = y
        nused = used | ((<u64>1) << y)
        ok = True
        nb = c.hadj[x]
        while nb:
            z = __builtin_ctzll(nb)
            nb &= nb - 1
            if c.rank[z] > i and domain(c, z, nused) == 0:
                ok = False
                break
        if ok and rec(c, i + 1, nused):
            return True
    c.sigma[x] = -1
    return False


def find_embedding(int n, hadj, gadj, order):
    """Backtracking core; ``order`` is computed by the Python caller."""
    if n > MAX_N:
        raise ValueError("compiled kernel supports n <= 64")
    cdef Ctx c
    cdef u64 hbuf[64]
    cdef u64 gbuf[64]
    cdef u64 bbuf[64]
    cdef int obuf[64]
    cdef int rbuf[64]
    cdef int sbuf[64]
    cdef int sig[64]
    cdef int hdeg[64]
    cdef int gdeg[64]
    cdef int x, y, i
    cdef u64 m, suffix
    for x in range(n):
        hbuf[x] = hadj[x]
        gbuf[x] = gadj[x]
        hdeg[x] = popcount(hbuf[x])
        gdeg[x] = popcount(gbuf[x])
        sig[x] = -1
    for i in range(n):
        obuf[i] = order[i]
        rbuf[obuf[i]] = i
    gd = [gdeg[x] for x in range(n)]
    hosts = sorted(range(n), key=lambda t: (-gd[t], t))
    for i in range(n):
        sbuf[i] = hosts[i]
    for x in range(n):
        m = 0
        for y in range(n):
            if gdeg[y] >= hdeg[x]:
                m |= (<u64>1) << y
        bbuf[x] = m
    c.split = n
    suffix = 0
    for i in range(n - 1, -1, -1):
        x = obuf[i]
        if hbuf[x] & suffix:
            break
        suffix |= (<u64>1) << x
        c.split = i
    c.n = n
    c.hadj = hbuf
    c.gadj = gbuf
    c.base = bbuf
    c.order = obuf
    c.rank = rbuf
    c.hosts = sbuf
    c.sigma = sig
    cdef bint found
    with nogil:
        found = rec(&c, 0, 0)
    if not found:
        return None
    return [sig[x] for x in range(n)]
