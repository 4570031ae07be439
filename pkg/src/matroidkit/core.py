"""Exact small-matroid kernel.

A :class:`Matroid` is an immutable ground-set size plus its complete rank
table.  Subsets of the ground set are plain ``int`` bitmasks throughout: bit
``i`` set means element ``i`` is present.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels

MAX_ELEMENTS = 20


class MatroidError(ValueError):
    """Raised for input that does not describe a matroid."""


def popcount(mask: int) -> int:
    return mask.bit_count()


def elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def submasks(mask: int):
    """Yield every submask of ``mask`` in increasing numeric order."""
    s = 0
    while True:
        yield s
        if s == mask:
            return
        s = (s - mask) & mask


class Matroid:
    """A matroid on ``{0, ..., n-1}`` stored as a full rank table."""

    __slots__ = ("n", "table", "label", "_dual", "_hash")

    def __init__(self, n: int, table: bytes, label: str | None = None):
        if not 0 <= n <= MAX_ELEMENTS:
            raise MatroidError(f"ground set size {n} outside 0..{MAX_ELEMENTS}")
        if len(table) != 1 << n:
            raise MatroidError("rank table has the wrong length")
        self.n = n
        self.table = bytes(table)
        self.label = label
        self._dual = None
        self._hash = None

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def r(self) -> int:
        return self.table[self.full]

    @property
    def corank_total(self) -> int:
        return self.n - self.r

    def rank(self, X: int) -> int:
        return self.table[X]

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.n == other.n and self.table == other.table

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.table))
        return self._hash

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        return f"<Matroid{name} n={self.n} r={self.r}>"


@dataclass(frozen=True)
class GroundMap:
    """Element correspondence from a matroid to a derived one.

    ``forward[e]`` is the new index of old element ``e`` or ``-1`` if ``e``
    was removed; ``kept`` is the mask of surviving old elements.
    """

    forward: tuple[int, ...]
    kept: int

    @classmethod
    def identity(cls, n: int) -> "GroundMap":
        return cls(tuple(range(n)), (1 << n) - 1)

    @classmethod
    def keeping(cls, n: int, kept: int) -> "GroundMap":
        fwd = []
        j = 0
        for i in range(n):
            if (kept >> i) & 1:
                fwd.append(j)
                j += 1
            else:
                fwd.append(-1)
        return cls(tuple(fwd), kept)

    @property
    def backward(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.forward) if j >= 0)

    def image(self, mask: int) -> int:
        out = 0
        for i in elements(mask & self.kept):
            out |= 1 << self.forward[i]
        return out

    def preimage(self, mask: int) -> int:
        back = self.backward
        return mask_of(back[j] for j in elements(mask))

    def compose(self, after: "GroundMap") -> "GroundMap":
        """The map ``after o self``."""
        fwd = tuple(after.forward[j] if j >= 0 else -1 for j in self.forward)
        kept = mask_of(i for i, j in enumerate(fwd) if j >= 0)
        return GroundMap(fwd, kept)


# ---------------------------------------------------------------- builders


def from_rank_table(n: int, table: bytes, label: str | None = None) -> Matroid:
    return Matroid(n, table, label)


def from_bases(n: int, bases: Iterable[int], label: str | None = None) -> Matroid:
    bases = sorted(set(bases))
    if not bases:
        raise MatroidError("a matroid needs at least one basis")
    full = (1 << n) - 1
    sizes = {popcount(b) for b in bases}
    if len(sizes) != 1:
        raise MatroidError(f"bases of different sizes {sorted(sizes)}")
    for b in bases:
        if b & ~full:
            raise MatroidError(f"basis {elements(b)} leaves the ground set")
    bad = kernels.exchange_violation(n, bases)
    if bad is not None:
        b1, b2, x = bad
        raise MatroidError(
            f"basis exchange fails for {elements(b1)}, {elements(b2)} at element {x}"
        )
    return Matroid(n, kernels.rank_from_bases(n, bases), label)


def from_circuits(n: int, circuits: Iterable[int], label: str | None = None) -> Matroid:
    circuits = sorted(set(circuits))
    if 0 in circuits:
        raise MatroidError("the empty set cannot be a circuit")
    for a in circuits:
        for b in circuits:
            if a != b and a & b == a:
                raise MatroidError(f"circuit {elements(a)} lies inside {elements(b)}")
    size = 1 << n
    indep = bytearray(size)
    by_top: dict[int, list[int]] = {}
    for c in circuits:
        by_top.setdefault(c.bit_length() - 1, []).append(c)
    for mask in range(size):
        if mask == 0:
            indep[0] = 1
            continue
        top = mask.bit_length() - 1
        if not indep[mask ^ (1 << top)]:
            continue
        indep[mask] = all(c & mask != c for c in by_top.get(top, ()))
    maximal = [
        m for m in range(size)
        if indep[m] and all(not indep[m | (1 << e)] for e in range(n) if not (m >> e) & 1)
    ]
    M = from_bases(n, maximal, label)
    got = circuits_of(M)
    if got != circuits:
        raise MatroidError("the given sets are not the circuits of any matroid")
    return M


def from_linear_rep(p: int, matrix: Sequence[Sequence[int]], label: str | None = None) -> Matroid:
    """Column matroid of a ``rows x n`` matrix over GF(p)."""
    if p not in (2, 3, 5, 7):
        raise MatroidError(f"field size {p} not supported")
    rows = len(matrix)
    n = len(matrix[0]) if rows else 0
    if any(len(row) != n for row in matrix):
        raise MatroidError("ragged matrix")
    if n > MAX_ELEMENTS:
        raise MatroidError("too many columns")
    columns = [tuple(matrix[i][j] % p for i in range(rows)) for j in range(n)]
    return Matroid(n, kernels.rank_gfp(p, rows, columns), label)


def from_columns(p: int, rows: int, columns: Sequence[Sequence[int]], label=None) -> Matroid:
    return Matroid(len(columns), kernels.rank_gfp(p, rows, [tuple(c) for c in columns]), label)


# ---------------------------------------------------------------- rank data


def rank(M: Matroid, X: int) -> int:
    return M.table[X]


def corank(M: Matroid, X: int) -> int:
    return popcount(X) + M.table[M.full ^ X] - M.r


def closure(M: Matroid, X: int) -> int:
    t = M.table
    rx = t[X]
    out = X
    for e in range(M.n):
        b = 1 << e
        if not X & b and t[X | b] == rx:
            out |= b
    return out


def coclosure(M: Matroid, X: int) -> int:
    return closure(dual(M), X)


def is_independent(M: Matroid, X: int) -> bool:
    return M.table[X] == popcount(X)


def is_circuit(M: Matroid, X: int) -> bool:
    t = M.table
    k = popcount(X)
    if k == 0 or t[X] != k - 1:
        return False
    return all(t[X ^ (1 << e)] == k - 1 for e in elements(X))


def is_cocircuit(M: Matroid, X: int) -> bool:
    return is_circuit(dual(M), X)


def is_flat(M: Matroid, X: int) -> bool:
    return closure(M, X) == X


def is_hyperplane(M: Matroid, X: int) -> bool:
    return is_flat(M, X) and M.table[X] == M.r - 1


def loops(M: Matroid) -> int:
    return mask_of(e for e in range(M.n) if M.table[1 << e] == 0)


def coloops(M: Matroid) -> int:
    return loops(dual(M))


def dual(M: Matroid) -> Matroid:
    if M._dual is None:
        D = Matroid(M.n, kernels.dual_rank(M.table, M.n), _dual_label(M.label))
        D._dual = M
        M._dual = D
    return M._dual


def _dual_label(label):
    if label is None:
        return None
    return label[:-1] if label.endswith("*") else label + "*"


def minor(M: Matroid, C: int = 0, D: int = 0) -> tuple[Matroid, GroundMap]:
    """``M / C \\ D`` relabelled onto an initial segment in index order."""
    if C & D:
        raise MatroidError("contracted and deleted sets overlap")
    if C == 0 and D == 0:
        return M, GroundMap.identity(M.n)
    table = kernels.minor_rank(M.table, M.n, C, D)
    m = M.n - popcount(C) - popcount(D)
    return Matroid(m, table), GroundMap.keeping(M.n, M.full & ~(C | D))


def delete(M: Matroid, D: int) -> Matroid:
    return minor(M, 0, D)[0]


def contract(M: Matroid, C: int) -> Matroid:
    return minor(M, C, 0)[0]


def restrict(M: Matroid, X: int) -> Matroid:
    return minor(M, 0, M.full & ~X)[0]


def circuits_of(M: Matroid) -> list[int]:
    t = M.table
    out = []
    for X in range(1, 1 << M.n):
        k = popcount(X)
        if t[X] != k - 1:
            continue
        if all(t[X ^ (1 << e)] == k - 1 for e in elements(X)):
            out.append(X)
    return out


circuits = circuits_of


def cocircuits(M: Matroid) -> list[int]:
    return circuits_of(dual(M))


def triangles(M: Matroid) -> list[int]:
    return [c for c in circuits_of(M) if popcount(c) == 3]


def triads(M: Matroid) -> list[int]:
    return [c for c in cocircuits(M) if popcount(c) == 3]


def bases_of(M: Matroid) -> list[int]:
    t = M.table
    r = M.r
    return [X for X in range(1 << M.n) if popcount(X) == r and t[X] == r]


def _parallel_drop(M: Matroid) -> int:
    """Loops plus every non-smallest member of each parallel class."""
    t = M.table
    drop = loops(M)
    for e in range(M.n):
        if (drop >> e) & 1:
            continue
        for f in range(e + 1, M.n):
            if not (drop >> f) & 1 and t[(1 << e) | (1 << f)] == 1:
                drop |= 1 << f
    return drop


def simplify(M: Matroid) -> tuple[Matroid, GroundMap]:
    return minor(M, 0, _parallel_drop(M))


def cosimplify(M: Matroid) -> tuple[Matroid, GroundMap]:
    return minor(M, _parallel_drop(dual(M)), 0)


def is_simple(M: Matroid) -> bool:
    return _parallel_drop(M) == 0


def relabel(M: Matroid, perm: Sequence[int]) -> Matroid:
    """Matroid whose element ``i`` is ``M``'s element ``perm[i]``."""
    n = M.n
    t = M.table
    old = [0] * (1 << n)
    for j in range(n):
        bit = 1 << j
        img = 1 << perm[j]
        for k in range(bit):
            old[bit | k] = old[k] | img
    return Matroid(n, bytes(t[m] for m in old), M.label)


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    n = M1.n + M2.n
    if n > MAX_ELEMENTS:
        raise MatroidError("direct sum too large")
    low = (1 << M1.n) - 1
    t1, t2 = M1.table, M2.table
    table = bytes(t1[X & low] + t2[X >> M1.n] for X in range(1 << n))
    return Matroid(n, table)


def check_axioms(M: Matroid) -> str | None:
    """Return a description of the first rank-axiom failure, or ``None``."""
    t = M.table
    if t[0] != 0:
        return "r(empty) != 0"
    for X in range(1 << M.n):
        for e in range(M.n):
            b = 1 << e
            if not X & b and not t[X] <= t[X | b] <= t[X] + 1:
                return f"unit increase fails at {elements(X)} + {e}"
    for X in range(1 << M.n):
        for Y in range(X + 1, 1 << M.n):
            if t[X] + t[Y] < t[X | Y] + t[X & Y]:
                return f"submodularity fails at {elements(X)}, {elements(Y)}"
    return None


# ---------------------------------------------------------------- isomorphism


def _refine(M: Matroid, colors: list) -> list[int]:
    """One colour-refinement round on the element-pair rank structure."""
    t = M.table
    n = M.n
    sig = []
    for e in range(n):
        neigh = sorted((colors[f], t[(1 << e) | (1 << f)]) for f in range(n) if f != e)
        sig.append((colors[e], tuple(neigh)))
    order = sorted(set(sig))
    index = {s: i for i, s in enumerate(order)}
    return [index[s] for s in sig]


@lru_cache(maxsize=400_000)
def _canonical(n: int, table: bytes) -> tuple[str, tuple[int, ...]]:
    full = (1 << n) - 1
    r = table[full]
    inv = kernels.element_invariants(table, n)
    order = sorted(set(inv))
    colors = [order.index(v) for v in inv]
    while True:
        new = _refine(Matroid(n, table), colors)
        if len(set(new)) == len(set(colors)):
            break
        colors = new
    colors = _refine(Matroid(n, table), colors)
    pos_cell = sorted(colors)
    basis = bytes(1 if table[m] == r and m.bit_count() == r else 0 for m in range(1 << n))
    twins = kernels.twin_classes(table, n)
    bits, perm = kernels.canonical_search(basis, n, r, pos_cell, colors, twins)
    key = f"{n}:{r}:" + "".join("1" if b else "0" for b in bits)
    return key, tuple(perm)


def canonical_key(M: Matroid) -> str:
    """``"n:r:bits"``; equal exactly when the matroids are isomorphic."""
    return _canonical(M.n, M.table)[0]


def canonical_form(M: Matroid) -> str:
    """Least basis-indicator bit string (``r``-subsets in lexicographic order)."""
    return canonical_key(M).split(":", 2)[2]


def canonical_perm(M: Matroid) -> tuple[int, ...]:
    return _canonical(M.n, M.table)[1]


def canonical_relabel(M: Matroid) -> Matroid:
    return relabel(M, canonical_perm(M))


def is_isomorphic(M: Matroid, N: Matroid) -> bool:
    if M.n != N.n or M.r != N.r:
        return False
    return canonical_key(M) == canonical_key(N)


def isomorphism(M: Matroid, N: Matroid) -> list[int] | None:
    """A bijection ``phi`` with ``N`` element ``phi[e]`` matching ``M`` element ``e``."""
    if not is_isomorphic(M, N):
        return None
    pm = canonical_perm(M)
    pn = canonical_perm(N)
    phi = [0] * M.n
    for pos in range(M.n):
        phi[pm[pos]] = pn[pos]
    return phi


def r_subsets(n: int, r: int, order: str = "lex") -> list[tuple[int, ...]]:
    """``r``-subsets of ``range(n)``; ``revlex`` compares largest elements first."""
    subs = list(combinations(range(n), r))
    if order == "revlex":
        subs.sort(key=lambda s: s[::-1])
    return subs


def basis_bits(M: Matroid, order: str = "lex") -> str:
    t, r = M.table, M.r
    return "".join("1" if t[mask_of(s)] == r else "0" for s in r_subsets(M.n, r, order))


def from_basis_bits(n: int, r: int, bits: str, order: str = "lex") -> Matroid:
    """Inverse of the basis-indicator encoding."""
    subs = r_subsets(n, r, order)
    if len(bits) != len(subs):
        raise MatroidError(f"expected {len(subs)} basis flags, got {len(bits)}")
    bases = [mask_of(s) for s, b in zip(subs, bits) if b == "1"]
    return from_bases(n, bases)
