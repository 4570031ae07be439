"""Brute-force enumeration of all matroids on a small ground set.

Every matroid on ``n`` elements is a single-element extension of its deletion
of the last element, and extensions correspond to modular cuts of flats.  This
is deliberately independent of the catalog generator (which only builds
representable matroids), so it can serve as an oracle for it.
"""

from functools import lru_cache

from matroidkit import core


def flats(M):
    t = M.table
    out = []
    for X in range(1 << M.n):
        if all(t[X | (1 << e)] > t[X] for e in range(M.n) if not X >> e & 1):
            out.append(X)
    return out


def modular_cuts(M):
    """All modular cuts (including the empty one) of ``M``, as sets of flats.

    Breadth-first from the empty cut: adding a flat whose covers are all
    present and closing under modular intersection reaches every cut, since
    any larger cut contains such a flat of maximal rank outside the current one.
    """
    t = M.table
    fl = flats(M)
    covers = {X: [Y for Y in fl if Y != X and Y & X == X and t[Y] == t[X] + 1] for X in fl}
    # meets[X]: (Y, X & Y) for each flat Y forming a modular pair with X
    meets = {X: [] for X in fl}
    for X in fl:
        for Y in fl:
            Z = X & Y
            if Z in covers and t[X] + t[Y] == t[X | Y] + t[Z]:
                meets[X].append((Y, Z))

    def close(cut, Z):
        cut = set(cut)
        stack = [Z]
        while stack:
            X = stack.pop()
            if X in cut:
                continue
            cut.add(X)
            stack.extend(Y for Y in fl if Y & X == X and Y not in cut)
            stack.extend(W for Y, W in meets[X] if Y in cut and W not in cut)
        return frozenset(cut)

    start = frozenset()
    seen = {start}
    queue = [start]
    while queue:
        cut = queue.pop()
        for Z in fl:
            if Z not in cut and all(Y in cut for Y in covers[Z]):
                nxt = close(cut, Z)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return list(seen)


def extend(M, cut):
    n = M.n
    t = M.table
    new = bytearray(1 << (n + 1))
    clo = [core.closure(M, X) for X in range(1 << n)]
    for X in range(1 << n):
        new[X] = t[X]
        new[X | (1 << n)] = t[X] if clo[X] in cut else t[X] + 1
    return core.Matroid(n + 1, bytes(new))


@lru_cache(maxsize=None)
def all_matroids(n):
    """One representative of every isomorphism class on ``n`` elements."""
    if n == 0:
        return (core.Matroid(0, b"\x00"),)
    seen = {}
    for M in all_matroids(n - 1):
        for cut in modular_cuts(M):
            N = extend(M, cut)
            seen.setdefault(core.canonical_key(N), N)
    return tuple(seen[k] for k in sorted(seen))


def up_to(n):
    return [M for k in range(n + 1) for M in all_matroids(k)]
