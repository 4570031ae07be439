"""Minor testing and the elastic / N-elastic / N-revealing classification."""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
from itertools import combinations

from . import core
from .connectivity import is_3_connected
from .core import Matroid, elements, popcount


class MinorOracle:
    """Memoized minor-class computation.

    ``classes(M)`` is the set of canonical keys of every minor of ``M``,
    including ``M`` itself and the empty matroid.  Results are cached by
    canonical key, so isomorphic inputs share work; the cache never changes
    an answer.
    """

    def __init__(self, table_cache: int = 200_000):
        self._by_key: dict[str, frozenset] = {}
        self._by_table: OrderedDict = OrderedDict()
        self._table_cache = table_cache

    def key(self, M: Matroid) -> str:
        return core.canonical_key(M)

    def classes(self, M: Matroid) -> frozenset:
        tk = (M.n, M.table)
        hit = self._by_table.get(tk)
        if hit is not None:
            self._by_table.move_to_end(tk)
            return hit
        key = core.canonical_key(M)
        res = self._by_key.get(key)
        if res is None:
            res = self._compute(core.canonical_relabel(M), key)
        self._by_table[tk] = res
        if len(self._by_table) > self._table_cache:
            self._by_table.popitem(last=False)
        return res

    def _compute(self, C: Matroid, key: str) -> frozenset:
        acc = {key}
        for e in range(C.n):
            b = 1 << e
            for child in (core.delete(C, b), core.contract(C, b)):
                acc |= self.classes(child)
        res = frozenset(acc)
        self._by_key[key] = res
        return res

    def has_minor(self, M: Matroid, N: Matroid) -> bool:
        if N.n > M.n or N.r > M.r or N.n - N.r > M.n - M.r:
            return False
        return core.canonical_key(N) in self.classes(M)

    def classes_avoiding(self, M: Matroid, contract: int, X: int) -> frozenset:
        """Keys of minors ``M / contract / C' \\ D'`` retaining at most one
        element of ``X`` (``X`` disjoint from ``contract``)."""
        base = core.contract(M, contract) if contract else M
        gm = core.GroundMap.keeping(M.n, M.full & ~contract)
        Xs = gm.image(X)
        xs = elements(Xs)
        acc = set()
        keeps = xs if xs else [None]
        for keep in keeps:
            gone = Xs & ~(1 << keep) if keep is not None else Xs
            for C in core.submasks(gone):
                acc |= self.classes(core.minor(base, C, gone ^ C)[0])
        return frozenset(acc)

    def classes_avoiding_delete(self, M: Matroid, delete: int, X: int) -> frozenset:
        """As :meth:`classes_avoiding` with ``delete`` removed by deletion."""
        D = core.dual(M)
        return frozenset(_dual_key(k) for k in self.classes_avoiding(D, delete, X))


_DUAL_KEYS: dict[str, str] = {}


def _dual_key(key: str) -> str:
    hit = _DUAL_KEYS.get(key)
    if hit is None:
        n, r, bits = key.split(":", 2)
        M = core.from_basis_bits(int(n), int(r), bits)
        hit = core.canonical_key(core.dual(M))
        _DUAL_KEYS[key] = hit
    return hit


def dual_key(key: str) -> str:
    return _dual_key(key)


def key_matroid(key: str) -> Matroid:
    n, r, bits = key.split(":", 2)
    return core.from_basis_bits(int(n), int(r), bits)


_ORACLE = MinorOracle()


def default_oracle() -> MinorOracle:
    return _ORACLE


def has_minor(M: Matroid, N: Matroid, oracle: MinorOracle | None = None) -> bool:
    return (oracle or _ORACLE).has_minor(M, N)


@dataclass(frozen=True)
class MinorWitness:
    C: int
    D: int
    retained: int


def minor_witnesses(M: Matroid, N: Matroid) -> list[MinorWitness]:
    """Every ``(C, D)`` with ``M / C \\ D`` isomorphic to ``N``."""
    target = core.canonical_key(N)
    out = []
    if N.n > M.n:
        return out
    for R in range(1 << M.n):
        if popcount(R) != N.n:
            continue
        gone = M.full ^ R
        for C in core.submasks(gone):
            if M.table[C | R] - M.table[C] != N.r:
                continue
            m, _ = core.minor(M, C, gone ^ C)
            if m.r == N.r and core.canonical_key(m) == target:
                out.append(MinorWitness(C, gone ^ C, R))
    return out


# ---------------------------------------------------------------- elasticity


def si_contract(M: Matroid, e: int) -> Matroid:
    return core.simplify(core.contract(M, 1 << e))[0]


def co_delete(M: Matroid, e: int) -> Matroid:
    return core.cosimplify(core.delete(M, 1 << e))[0]


def is_elastic(M: Matroid, e: int) -> bool:
    return is_3_connected(si_contract(M, e)) and is_3_connected(co_delete(M, e))


def elastic_elements(M: Matroid) -> int:
    if not is_3_connected(M):
        raise core.MatroidError("elasticity is defined for 3-connected matroids")
    return core.mask_of(e for e in range(M.n) if is_elastic(M, e))


@dataclass(frozen=True)
class ElementDetail:
    si3: bool
    co3: bool
    si_has: bool
    co_has: bool

    @property
    def elastic(self) -> bool:
        return self.si3 and self.co3

    @property
    def n_elastic(self) -> bool:
        return self.si3 and self.co3 and self.si_has and self.co_has

    @property
    def n_revealing(self) -> bool:
        return (self.si_has and not self.si3) or (self.co_has and not self.co3)


@dataclass(frozen=True)
class ElasticityReport:
    elastic: int
    n_elastic: int
    n_revealing: int
    detail: tuple[ElementDetail, ...]


def elasticity_report(M: Matroid, N: Matroid, oracle: MinorOracle | None = None) -> ElasticityReport:
    oracle = oracle or _ORACLE
    key = core.canonical_key(N)
    details = []
    for e in range(M.n):
        si = si_contract(M, e)
        co = co_delete(M, e)
        details.append(ElementDetail(
            is_3_connected(si), is_3_connected(co),
            key in oracle.classes(si), key in oracle.classes(co),
        ))
    pick = lambda f: core.mask_of(e for e, d in enumerate(details) if f(d))
    return ElasticityReport(
        pick(lambda d: d.elastic), pick(lambda d: d.n_elastic),
        pick(lambda d: d.n_revealing), tuple(details),
    )


def n_elastic_elements(M: Matroid, N: Matroid, oracle=None) -> int:
    return elasticity_report(M, N, oracle).n_elastic


def n_revealing_elements(M: Matroid, N: Matroid, oracle=None) -> int:
    return elasticity_report(M, N, oracle).n_revealing


def reveals(M: Matroid, sep, N: Matroid, oracle=None) -> bool:
    """Whether the theta separator ``sep`` reveals ``N``."""
    if sep.orientation == "primal":
        rep = elasticity_report(M, N, oracle)
        return bool(rep.n_revealing & sep.Z)
    rep = elasticity_report(core.dual(M), core.dual(N), oracle)
    return bool(rep.n_revealing & sep.W)


def small_three_connected(max_n: int = 3) -> list[Matroid]:
    """Every 3-connected matroid on at most ``max_n`` elements, up to isomorphism."""
    from .constructions import uniform

    out = []
    for n in range(max_n + 1):
        for r in range(n + 1):
            U = uniform(r, n)
            if is_3_connected(U):
                out.append(U)
    return out
