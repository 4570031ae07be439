# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank-table kernels; see ``_pykernels`` for the reference versions."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


cdef inline int popcount(unsigned int x) nogil:
    return __builtin_popcount(x)


def rank_from_bases(int n, bases):
    cdef unsigned int size = 1u << n
    cdef bytearray indep_buf = bytearray(size)
    cdef bytearray rank_buf = bytearray(size)
    cdef unsigned char[::1] indep = indep_buf
    cdef unsigned char[::1] rank = rank_buf
    cdef unsigned int mask, rest, low, m
    cdef long long imask
    cdef int best, v
    for b in bases:
        indep[<unsigned int>b] = 1
    for imask in range(<long long>size - 1, -1, -1):
        mask = <unsigned int>imask
        if indep[mask]:
            continue
        rest = ~mask & (size - 1)
        while rest:
            low = rest & (~rest + 1)
            if indep[mask | low]:
                indep[mask] = 1
                break
            rest ^= low
    for mask in range(1, size):
        if indep[mask]:
            rank[mask] = popcount(mask)
            continue
        best = 0
        m = mask
        while m:
            low = m & (~m + 1)
            v = rank[mask ^ low]
            if v > best:
                best = v
            m ^= low
        rank[mask] = best
    return bytes(rank_buf)


def exchange_violation(int n, bases):
    cdef unsigned int size = 1u << n
    cdef bytearray buf = bytearray(size)
    cdef unsigned char[::1] is_basis = buf
    cdef Py_ssize_t nb = len(bases), i, j
    cdef unsigned int *bs = <unsigned int *>malloc(nb * sizeof(unsigned int) + 1)
    cdef unsigned int b1, b2, only1, only2, x, ys, y, base
    cdef bint found
    try:
        for i in range(nb):
            bs[i] = <unsigned int>bases[i]
            is_basis[bs[i]] = 1
        for i in range(nb):
            b1 = bs[i]
            for j in range(nb):
                b2 = bs[j]
                only1 = b1 & ~b2
                only2 = b2 & ~b1
                while only1:
                    x = only1 & (~only1 + 1)
                    only1 ^= x
                    base = b1 ^ x
                    ys = only2
                    found = False
                    while ys:
                        y = ys & (~ys + 1)
                        ys ^= y
                        if is_basis[base | y]:
                            found = True
                            break
                    if not found:
                        return b1, b2, __builtin_ctz(x)
        return None
    finally:
        free(bs)


def rank_gfp(int p, int rows, columns):
    cdef int n = len(columns)
    cdef unsigned int size = 1u << n
    cdef bytearray out_buf = bytearray(size)
    cdef unsigned char[::1] out = out_buf
    cdef int *cols = <int *>malloc((n * rows + 1) * sizeof(int))
    cdef int *piv = <int *>malloc((rows * rows + 1) * sizeof(int))
    cdef int *prow = <int *>malloc((rows + 1) * sizeof(int))
    cdef int v[64]
    cdef int inv[16]
    cdef int a, i, j, k, c, s, r, e
    cdef unsigned int mask, m, low
    if rows > 64 or p > 16:
        raise ValueError("matrix too large for kernel")
    try:
        for j in range(n):
            col = columns[j]
            for i in range(rows):
                cols[j * rows + i] = (<int>col[i]) % p
        inv[0] = 0
        for a in range(1, p):
            inv[a] = 1
            for k in range(p - 2):
                inv[a] = (inv[a] * a) % p
        for mask in range(1, size):
            r = 0
            m = mask
            while m:
                low = m & (~m + 1)
                m ^= low
                e = __builtin_ctz(low)
                for i in range(rows):
                    v[i] = cols[e * rows + i]
                for k in range(r):
                    c = v[prow[k]]
                    if c:
                        for i in range(rows):
                            v[i] = (v[i] - c * piv[k * rows + i]) % p
                            if v[i] < 0:
                                v[i] += p
                for i in range(rows):
                    if v[i]:
                        s = inv[v[i]]
                        for k in range(rows):
                            piv[r * rows + k] = (v[k] * s) % p
                        prow[r] = i
                        r += 1
                        break
            out[mask] = r
        return bytes(out_buf)
    finally:
        free(cols)
        free(piv)
        free(prow)


def minor_rank(const unsigned char[::1] rank, int n, unsigned int contract, unsigned int delete):
    cdef int keep[32]
    cdef int m = 0, i, j
    cdef unsigned int bit, k, mask
    for i in range(n):
        if not ((contract >> i) & 1) and not ((delete >> i) & 1):
            keep[m] = i
            m += 1
    cdef unsigned int size = 1u << m
    cdef bytearray out_buf = bytearray(size)
    cdef unsigned char[::1] out = out_buf
    cdef unsigned int *old = <unsigned int *>malloc(size * sizeof(unsigned int))
    cdef int base = rank[contract]
    try:
        old[0] = 0
        for j in range(m):
            bit = 1u << j
            for k in range(bit):
                old[bit | k] = old[k] | (1u << keep[j])
        for mask in range(size):
            out[mask] = rank[old[mask] | contract] - base
        return bytes(out_buf)
    finally:
        free(old)


def dual_rank(const unsigned char[::1] rank, int n):
    cdef unsigned int full = (1u << n) - 1
    cdef unsigned int size = 1u << n
    cdef int total = rank[full]
    cdef bytearray out_buf = bytearray(size)
    cdef unsigned char[::1] out = out_buf
    cdef unsigned int m
    for m in range(size):
        out[m] = popcount(m) + rank[full ^ m] - total
    return bytes(out_buf)


def find_separation(const unsigned char[::1] rank, int n, int k):
    cdef unsigned int full = (1u << n) - 1
    cdef int total = rank[full]
    cdef unsigned int mask
    cdef int c
    if n == 0:
        return -1
    for mask in range(1, full):
        c = popcount(mask)
        if c < k or n - c < k:
            continue
        if rank[mask] + rank[full ^ mask] - total <= k - 1:
            return mask
    return -1


def vertical_triples(const unsigned char[::1] rank, int n):
    cdef unsigned int full = (1u << n) - 1
    cdef int total = rank[full]
    cdef unsigned int eb, rest, x, y
    cdef int e, rx, ry, rxe, rye
    out = []
    for e in range(n):
        eb = 1u << e
        rest = full ^ eb
        x = rest
        while True:
            x = (x - 1) & rest
            if x == 0:
                break
            y = rest ^ x
            rx = rank[x]
            ry = rank[y]
            if rx < 3 or ry < 3:
                continue
            rxe = rank[x | eb]
            rye = rank[y | eb]
            if rxe != rx or rye != ry:
                continue
            if rxe + ry - total > 2 or rx + rye - total > 2:
                continue
            out.append((x, e))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def reach_table(const unsigned char[::1] rank, int n, unsigned int start, unsigned int pool, bint exact):
    cdef unsigned int full = (1u << n) - 1
    cdef int total = rank[full]
    cdef unsigned int size = 1u << n
    cdef bytearray buf = bytearray(size)
    cdef unsigned char[::1] reach = buf
    cdef unsigned int s, mask, m, low
    cdef int lam
    reach[start] = 1
    # ascending submasks of pool
    s = 0
    while True:
        s = (s - pool) & pool
        if s == 0:
            break
        mask = start | s
        if reach[mask]:
            continue
        lam = rank[mask] + rank[full ^ mask] - total
        if lam > 2 or (exact and lam != 2):
            continue
        m = s
        while m:
            low = m & (~m + 1)
            m ^= low
            if reach[mask ^ low]:
                reach[mask] = 1
                break
    return bytes(buf)


def element_invariants(const unsigned char[::1] rank, int n):
    cdef unsigned int full = (1u << n) - 1
    cdef unsigned int eb, rest, x
    cdef int e, k
    cdef long spans[33]
    cdef long ispans[33]
    out = []
    for e in range(n):
        eb = 1u << e
        memset(spans, 0, sizeof(spans))
        memset(ispans, 0, sizeof(ispans))
        rest = full ^ eb
        x = rest
        while True:
            if rank[x | eb] == rank[x]:
                k = popcount(x)
                spans[k] += 1
                if rank[x] == k:
                    ispans[k] += 1
            if x == 0:
                break
            x = (x - 1) & rest
        out.append((rank[eb],) + tuple([spans[k] for k in range(n)])
                   + tuple([ispans[k] for k in range(n)]))
    return out


def twin_classes(const unsigned char[::1] rank, int n):
    cdef unsigned int size = 1u << n
    cdef unsigned int ab, bb, mask
    cdef int a, b
    cdef bint ok
    prev = [-1] * n
    for b in range(n):
        for a in range(b - 1, -1, -1):
            ab = 1u << a
            bb = 1u << b
            ok = True
            for mask in range(size):
                if (mask & ab) and not (mask & bb):
                    if rank[mask] != rank[mask ^ ab ^ bb]:
                        ok = False
                        break
            if ok:
                prev[b] = a
                break
    return prev


cdef struct CanonState:
    int n
    int nsub
    int r
    const unsigned char *basis
    int *subsets
    int *pos_cell
    int *elem_cell
    int *twin_prev
    int *perm
    int *used
    unsigned char *best
    unsigned char *bits
    int *best_perm
    bint have_best


cdef void canon_leaf(CanonState *st) nogil:
    cdef int j, t, b
    cdef unsigned int m
    cdef bint better = not st.have_best
    for j in range(st.nsub):
        m = 0
        for t in range(st.r):
            m |= 1u << st.perm[st.subsets[j * st.r + t]]
        b = st.basis[m]
        if not better:
            if b > st.best[j]:
                return
            if b < st.best[j]:
                better = True
        st.bits[j] = b
    if better:
        for j in range(st.nsub):
            st.best[j] = st.bits[j]
        for j in range(st.n):
            st.best_perm[j] = st.perm[j]
        st.have_best = True


cdef void canon_place(CanonState *st, int pos) nogil:
    cdef int e, cell, t
    if pos == st.n:
        canon_leaf(st)
        return
    cell = st.pos_cell[pos]
    for e in range(st.n):
        if st.used[e] or st.elem_cell[e] != cell:
            continue
        t = st.twin_prev[e]
        if t >= 0 and not st.used[t]:
            continue
        st.used[e] = 1
        st.perm[pos] = e
        canon_place(st, pos + 1)
        st.used[e] = 0


def canonical_search(const unsigned char[::1] basis, int n, int r, pos_cell, elem_cell, twin_prev):
    from itertools import combinations
    subs = list(combinations(range(n), r))
    cdef CanonState st
    cdef int i, j
    st.n = n
    st.r = r
    st.nsub = len(subs)
    st.basis = &basis[0]
    st.have_best = False
    st.subsets = <int *>malloc((st.nsub * r + 1) * sizeof(int))
    st.pos_cell = <int *>malloc((n + 1) * sizeof(int))
    st.elem_cell = <int *>malloc((n + 1) * sizeof(int))
    st.twin_prev = <int *>malloc((n + 1) * sizeof(int))
    st.perm = <int *>malloc((n + 1) * sizeof(int))
    st.used = <int *>malloc((n + 1) * sizeof(int))
    st.best_perm = <int *>malloc((n + 1) * sizeof(int))
    st.best = <unsigned char *>malloc(st.nsub + 1)
    st.bits = <unsigned char *>malloc(st.nsub + 1)
    try:
        for j in range(st.nsub):
            for i in range(r):
                st.subsets[j * r + i] = subs[j][i]
        for i in range(n):
            st.pos_cell[i] = pos_cell[i]
            st.elem_cell[i] = elem_cell[i]
            st.twin_prev[i] = twin_prev[i]
            st.used[i] = 0
        with nogil:
            canon_place(&st, 0)
        if not st.have_best:
            return b"", []
        return (bytes([st.best[j] for j in range(st.nsub)]),
                [st.best_perm[i] for i in range(n)])
    finally:
        free(st.subsets)
        free(st.pos_cell)
        free(st.elem_cell)
        free(st.twin_prev)
        free(st.perm)
        free(st.used)
        free(st.best_perm)
        free(st.best)
        free(st.bits)
