"""Pure-Python implementations of the rank-table kernels.

Every function here has a twin with an identical signature in the compiled
``_ckernels`` extension.  Rank tables are ``bytes`` objects of length ``2**n``
indexed by subset bitmask.
"""

from itertools import combinations


def _popcounts(n):
    return [m.bit_count() for m in range(1 << n)]


def rank_from_bases(n, bases):
    size = 1 << n
    indep = bytearray(size)
    for b in bases:
        indep[b] = 1
    for mask in range(size - 1, -1, -1):
        if indep[mask]:
            continue
        rest = ~mask & (size - 1)
        while rest:
            low = rest & -rest
            if indep[mask | low]:
                indep[mask] = 1
                break
            rest ^= low
    rank = bytearray(size)
    for mask in range(1, size):
        if indep[mask]:
            rank[mask] = mask.bit_count()
            continue
        best = 0
        m = mask
        while m:
            low = m & -m
            v = rank[mask ^ low]
            if v > best:
                best = v
            m ^= low
        rank[mask] = best
    return bytes(rank)


def exchange_violation(n, bases):
    """Return ``(b1, b2, x)`` breaking basis exchange, or ``None``."""
    is_basis = bytearray(1 << n)
    for b in bases:
        is_basis[b] = 1
    for b1 in bases:
        for b2 in bases:
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            while only1:
                x = only1 & -only1
                only1 ^= x
                base = b1 ^ x
                ys = only2
                found = False
                while ys:
                    y = ys & -ys
                    ys ^= y
                    if is_basis[base | y]:
                        found = True
                        break
                if not found:
                    return b1, b2, x.bit_length() - 1
    return None


def rank_gfp(p, rows, columns):
    """Rank table of the column matroid of a matrix over GF(p).

    ``columns`` is a list of ``rows``-tuples of residues.
    """
    n = len(columns)
    size = 1 << n
    inv = [0] * p
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    rank = bytearray(size)
    for mask in range(1, size):
        pivots = []  # (pivot row, normalized vector)
        r = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            v = list(columns[low.bit_length() - 1])
            for prow, pv in pivots:
                c = v[prow]
                if c:
                    for i in range(rows):
                        v[i] = (v[i] - c * pv[i]) % p
            for i in range(rows):
                if v[i]:
                    s = inv[v[i]]
                    v = [(x * s) % p for x in v]
                    pivots.append((i, v))
                    r += 1
                    break
        rank[mask] = r
    return bytes(rank)


def minor_rank(rank, n, contract, delete):
    keep = [i for i in range(n) if not (contract >> i) & 1 and not (delete >> i) & 1]
    m = len(keep)
    base = rank[contract]
    out = bytearray(1 << m)
    old = [0] * (1 << m)
    for j, e in enumerate(keep):
        bit = 1 << j
        for k in range(bit):
            old[bit | k] = old[k] | (1 << e)
    for mask in range(1 << m):
        out[mask] = rank[old[mask] | contract] - base
    return bytes(out)


def dual_rank(rank, n):
    full = (1 << n) - 1
    total = rank[full]
    return bytes(
        m.bit_count() + rank[full ^ m] - total for m in range(1 << n)
    )


def find_separation(rank, n, k):
    """Return a mask ``X`` with ``lambda(X) <= k-1`` and both sides of size
    at least ``k``, or ``-1`` when none exists."""
    full = (1 << n) - 1
    total = rank[full]
    for mask in range(1, full):
        c = mask.bit_count()
        if c < k or n - c < k:
            continue
        if rank[mask] + rank[full ^ mask] - total <= k - 1:
            return mask
    return -1


def vertical_triples(rank, n):
    """All ``(X, e)`` such that ``(X, {e}, E-X-e)`` is a vertical 3-separation."""
    full = (1 << n) - 1
    total = rank[full]
    out = []
    for e in range(n):
        eb = 1 << e
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


def reach_table(rank, n, start, pool, exact):
    """Masks reachable from ``start`` adding one ``pool`` element at a time,
    every visited mask (beyond ``start``) having connectivity at most 2
    (exactly 2 when ``exact``)."""
    full = (1 << n) - 1
    total = rank[full]
    size = 1 << n
    reach = bytearray(size)
    reach[start] = 1
    sub = pool
    subs = []
    while True:
        subs.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & pool
    subs.reverse()
    for s in subs:
        mask = start | s
        if s == 0 or reach[mask]:
            continue
        lam = rank[mask] + rank[full ^ mask] - total
        if lam > 2 or (exact and lam != 2):
            continue
        m = s
        while m:
            low = m & -m
            m ^= low
            if reach[mask ^ low]:
                reach[mask] = 1
                break
    return bytes(reach)


def element_invariants(rank, n):
    """Per-element isomorphism invariants.

    For element ``e`` the tuple holds ``r({e})`` followed by, for each size
    ``k``, the number of ``k``-subsets spanning ``e`` and the number of
    independent ``k``-subsets spanning ``e``.
    """
    full = (1 << n) - 1
    pc = _popcounts(n)
    out = []
    for e in range(n):
        eb = 1 << e
        spans = [0] * n
        ispans = [0] * n
        rest = full ^ eb
        x = rest
        while True:
            if rank[x | eb] == rank[x]:
                k = pc[x]
                spans[k] += 1
                if rank[x] == k:
                    ispans[k] += 1
            if x == 0:
                break
            x = (x - 1) & rest
        out.append((rank[eb],) + tuple(spans) + tuple(ispans))
    return out


def twin_classes(rank, n):
    """``prev[e]``: the largest smaller element ``f`` such that swapping
    ``e`` and ``f`` is an automorphism, else ``-1``."""
    size = 1 << n
    prev = [-1] * n
    for b in range(n):
        for a in range(b - 1, -1, -1):
            ab = 1 << a
            bb = 1 << b
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


def canonical_search(basis, n, r, pos_cell, elem_cell, twin_prev):
    """Lexicographically least basis-indicator string over admissible
    relabellings.

    A relabelling assigns an element to every position; position ``i`` may
    only receive elements ``e`` with ``elem_cell[e] == pos_cell[i]``, and an
    element may only be used after its ``twin_prev``.  ``basis`` is a
    ``2**n`` table of 0/1 flags.  Returns ``(bits, perm)`` with
    ``perm[position] = element``.
    """
    subsets = list(combinations(range(n), r))
    best = None
    best_perm = None
    perm = [0] * n
    used = [False] * n

    def leaf():
        nonlocal best, best_perm
        bits = bytearray(len(subsets))
        better = best is None
        for j, sub in enumerate(subsets):
            m = 0
            for pos in sub:
                m |= 1 << perm[pos]
            b = basis[m]
            if not better:
                if b > best[j]:
                    return
                if b < best[j]:
                    better = True
            bits[j] = b
        if better:
            best = bits
            best_perm = list(perm)

    def place(pos):
        if pos == n:
            leaf()
            return
        cell = pos_cell[pos]
        for e in range(n):
            if used[e] or elem_cell[e] != cell:
                continue
            t = twin_prev[e]
            if t >= 0 and not used[t]:
                continue
            used[e] = True
            perm[pos] = e
            place(pos + 1)
            used[e] = False

    place(0)
    if best is None:
        return b"", []
    return bytes(best), best_perm
