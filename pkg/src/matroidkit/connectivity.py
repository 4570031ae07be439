"""Connectivity function, separations, and sequential structure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import core, kernels
from .core import Matroid, MatroidError, elements, popcount


def lam(M: Matroid, X: int) -> int:
    """Connectivity ``r(X) + r(E-X) - r(M)``."""
    t = M.table
    return t[X] + t[M.full ^ X] - M.r


def is_k_separating(M: Matroid, X: int, k: int) -> bool:
    return lam(M, X) <= k - 1


def is_exactly_k_separating(M: Matroid, X: int, k: int) -> bool:
    return lam(M, X) == k - 1


def k_separations(M: Matroid, k: int) -> list[int]:
    """One side ``X`` of every ``k``-separation; element 0 always lies on the
    other side."""
    if M.n == 0:
        return []
    t, full, r = M.table, M.full, M.r
    out = []
    for X in range(2, full + 1, 2):
        c = popcount(X)
        if c < k or M.n - c < k:
            continue
        if t[X] + t[full ^ X] - r <= k - 1:
            out.append(X)
    return out


def is_n_connected(M: Matroid, n: int) -> bool:
    """No ``k``-separation for any ``k < n``."""
    return all(kernels.find_separation(M.table, M.n, k) < 0 for k in range(1, n))


def is_connected(M: Matroid) -> bool:
    return is_n_connected(M, 2)


def is_3_connected(M: Matroid) -> bool:
    return is_n_connected(M, 3)


def local_connectivity(M: Matroid, A: int, B: int) -> int:
    t = M.table
    return t[A] + t[B] - t[A | B]


@dataclass(frozen=True)
class VerticalSep3:
    X: int
    e: int
    Y: int
    kind: str = "vertical"

    @property
    def Ye(self) -> int:
        return self.Y | (1 << self.e)

    @property
    def Xe(self) -> int:
        return self.X | (1 << self.e)

    def as_dict(self, names=None) -> dict:
        fmt = (lambda m: [names[i] for i in elements(m)]) if names else elements
        e = names[self.e] if names else self.e
        return {"kind": self.kind, "X": fmt(self.X), "e": e, "Y": fmt(self.Y)}


def _require_3_connected(M: Matroid):
    if not is_3_connected(M):
        raise MatroidError("matroid is not 3-connected")


def _triples(M: Matroid, kind: str) -> list[VerticalSep3]:
    full = M.full
    return [
        VerticalSep3(X, e, full ^ X ^ (1 << e), kind)
        for X, e in kernels.vertical_triples(M.table, M.n)
    ]


def vertical_3_separations(M: Matroid, check: bool = True) -> list[VerticalSep3]:
    """Every ordered triple ``(X, {e}, Y)``, sorted by centre then ``X``."""
    if check:
        _require_3_connected(M)
    return _triples(M, "vertical")


def cyclic_3_separations(M: Matroid, check: bool = True) -> list[VerticalSep3]:
    if check:
        _require_3_connected(M)
    return _triples(core.dual(M), "cyclic")


def is_vertical_3_separation(M: Matroid, X: int, e: int, Y: int) -> bool:
    """Direct test of the definition, independent of the enumerator."""
    eb = 1 << e
    if X & Y or X & eb or Y & eb or (X | Y | eb) != M.full:
        return False
    t = M.table
    for A, B in ((X | eb, Y), (X, Y | eb)):
        if popcount(A) < 3 or popcount(B) < 3:
            return False
        if lam(M, A) > 2 or min(t[A], t[B]) < 3:
            return False
    return t[X | eb] == t[X] and t[Y | eb] == t[Y]


def _frame(M: Matroid, sep: VerticalSep3) -> Matroid:
    return core.dual(M) if sep.kind == "cyclic" else M


def is_maximal_vertical(M: Matroid, sep: VerticalSep3, pool=None) -> bool:
    """No separation of the same kind has ``Y' | e'`` strictly above ``Y | e``."""
    if pool is None:
        pool = _triples(_frame(M, sep), sep.kind)
    target = sep.Ye
    return not any(s.Ye != target and s.Ye & target == target for s in pool)


def maximal_separations(seps: Sequence[VerticalSep3]) -> list[VerticalSep3]:
    tops = {s.Ye for s in seps}
    return [
        s for s in seps
        if not any(t != s.Ye and t & s.Ye == s.Ye for t in tops)
    ]


def close_off(M: Matroid, sep: VerticalSep3) -> VerticalSep3:
    """``(X - cl(Y), {e}, cl(Y) - e)``, with ``cl*`` for cyclic separations."""
    N = _frame(M, sep)
    cy = core.closure(N, sep.Y)
    eb = 1 << sep.e
    return VerticalSep3(sep.X & ~cy, sep.e, cy & ~eb, sep.kind)


def sequential_reach(M: Matroid, start: int, pool: int, exact: bool = False) -> bytes:
    return kernels.reach_table(M.table, M.n, start, pool, exact)


def _order_from_reach(reach: bytes, start: int, pool: int) -> list[int] | None:
    mask = start | pool
    if not reach[mask]:
        return None
    order = []
    while mask != start:
        for e in elements(mask & pool):
            prev = mask ^ (1 << e)
            if reach[prev]:
                order.append(e)
                mask = prev
                break
        else:
            return None
    order.reverse()
    return order


def sequential_ordering(M: Matroid, X: int) -> list[int] | None:
    """An ordering of ``X`` whose prefixes are all 3-separating, if any."""
    return _order_from_reach(sequential_reach(M, 0, X), 0, X)


def is_sequential_3_separation(M: Matroid, X: int) -> bool:
    if not is_exactly_k_separating(M, X, 3):
        return False
    Y = M.full ^ X
    return sequential_ordering(M, X) is not None or sequential_ordering(M, Y) is not None


def has_path_width_three(M: Matroid) -> bool:
    return sequential_ordering(M, M.full) is not None


@dataclass(frozen=True)
class SeparationPath:
    parts: tuple[int, ...]


def is_path_of_3_separations(M: Matroid, parts: Sequence[int]) -> bool:
    seen = 0
    for p in parts:
        if p == 0 or seen & p:
            return False
        seen |= p
    if seen != M.full:
        return False
    acc = 0
    for p in parts[:-1]:
        acc |= p
        if lam(M, acc) != 2:
            return False
    return True
