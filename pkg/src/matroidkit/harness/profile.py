"""Lazily computed structural data for one matroid, shared by all checks."""

from __future__ import annotations

from functools import cached_property

from .. import connectivity as conn
from .. import core, structures
from ..core import Matroid, elements, popcount
from ..elasticity import MinorOracle, co_delete, default_oracle, key_matroid, si_contract

_THREE_CONN: dict[str, bool] = {}


def key_is_3_connected(key: str) -> bool:
    hit = _THREE_CONN.get(key)
    if hit is None:
        hit = conn.is_3_connected(key_matroid(key))
        _THREE_CONN[key] = hit
    return hit


def key_size(key: str) -> int:
    return int(key.split(":", 1)[0])


class Profile:
    def __init__(self, M: Matroid, oracle: MinorOracle | None = None):
        self.M = M
        self.oracle = oracle or default_oracle()

    # basic data
    @cached_property
    def D(self) -> Matroid:
        return core.dual(self.M)

    @cached_property
    def n(self) -> int:
        return self.M.n

    @cached_property
    def r(self) -> int:
        return self.M.r

    @cached_property
    def rstar(self) -> int:
        return self.M.n - self.M.r

    @cached_property
    def connected(self) -> bool:
        return conn.is_connected(self.M)

    @cached_property
    def conn3(self) -> bool:
        return conn.is_3_connected(self.M)

    @cached_property
    def lam(self) -> list[int]:
        t, full, r = self.M.table, self.M.full, self.M.r
        return [t[X] + t[full ^ X] - r for X in range(1 << self.n)]

    # single-element removals
    @cached_property
    def si(self) -> list[Matroid]:
        return [si_contract(self.M, e) for e in range(self.n)]

    @cached_property
    def co(self) -> list[Matroid]:
        return [co_delete(self.M, e) for e in range(self.n)]

    @cached_property
    def si3(self) -> list[bool]:
        return [conn.is_3_connected(m) for m in self.si]

    @cached_property
    def co3(self) -> list[bool]:
        return [conn.is_3_connected(m) for m in self.co]

    @cached_property
    def elastic(self) -> int:
        return core.mask_of(e for e in range(self.n) if self.si3[e] and self.co3[e])

    @cached_property
    def si_classes(self) -> list[frozenset]:
        return [self.oracle.classes(m) for m in self.si]

    @cached_property
    def co_classes(self) -> list[frozenset]:
        return [self.oracle.classes(m) for m in self.co]

    @cached_property
    def contract_classes(self) -> list[frozenset]:
        return [self.oracle.classes(core.contract(self.M, 1 << e)) for e in range(self.n)]

    @cached_property
    def delete_classes(self) -> list[frozenset]:
        return [self.oracle.classes(core.delete(self.M, 1 << e)) for e in range(self.n)]

    @cached_property
    def minor_keys(self) -> frozenset:
        return self.oracle.classes(self.M)

    @cached_property
    def conn3_minor_keys(self) -> list[str]:
        """Sorted canonical keys of the 3-connected minors."""
        return sorted(k for k in self.minor_keys if key_is_3_connected(k))

    def n_elastic(self, key: str) -> int:
        out = 0
        for e in range(self.n):
            if (self.si3[e] and self.co3[e] and key in self.si_classes[e]
                    and key in self.co_classes[e]):
                out |= 1 << e
        return out

    def n_revealing(self, key: str) -> int:
        out = 0
        for e in range(self.n):
            if ((key in self.si_classes[e] and not self.si3[e])
                    or (key in self.co_classes[e] and not self.co3[e])):
                out |= 1 << e
        return out

    # constrained minors
    def avoid_contract(self, e: int, X: int) -> frozenset:
        """Keys of minors of ``M/e`` meeting ``X`` in at most one element."""
        key = ("c", e, X)
        hit = self._avoid.get(key)
        if hit is None:
            hit = self.oracle.classes_avoiding(self.M, 1 << e, X)
            self._avoid[key] = hit
        return hit

    def avoid_delete(self, e: int, X: int) -> frozenset:
        """Keys of minors of ``M\\e`` meeting ``X`` in at most one element."""
        key = ("d", e, X)
        hit = self._avoid.get(key)
        if hit is None:
            hit = frozenset(
                self.oracle.key(core.dual(key_matroid(k)))
                for k in self.oracle.classes_avoiding(self.D, 1 << e, X)
            )
            self._avoid[key] = hit
        return hit

    @cached_property
    def _avoid(self) -> dict:
        return {}

    # separations
    @cached_property
    def vertical(self) -> list[conn.VerticalSep3]:
        return conn.vertical_3_separations(self.M, check=False)

    @cached_property
    def cyclic(self) -> list[conn.VerticalSep3]:
        return conn.cyclic_3_separations(self.M, check=False)

    @cached_property
    def vertical_maximal(self) -> list[conn.VerticalSep3]:
        return conn.maximal_separations(self.vertical)

    # fans
    @cached_property
    def fan_sets(self) -> dict[int, list[tuple[int, ...]]]:
        return structures.fan_sets(self.M)

    @cached_property
    def maximal_fan_sets(self) -> dict[int, list[tuple[int, ...]]]:
        sets = self.fan_sets
        return {
            F: o for F, o in sets.items()
            if not any(G != F and G & F == F for G in sets)
        }

    @cached_property
    def has_4fan(self) -> bool:
        return any(popcount(F) >= 4 for F in self.fan_sets)

    def is_4fan(self, F: int) -> bool:
        return popcount(F) == 4 and F in self.fan_sets

    # theta structures
    @cached_property
    def separators(self) -> list[structures.ThetaSeparator]:
        return structures.theta_separators(self.M)

    @cached_property
    def restrictions(self) -> list[structures.ThetaRestriction]:
        return structures.theta_restrictions(self.M)

    @cached_property
    def dual_restrictions(self) -> list[structures.ThetaRestriction]:
        return structures.theta_restrictions(self.D)

    def separator_reveals(self, sep: structures.ThetaSeparator, key: str) -> bool:
        # N*-revealing in M* coincides with N-revealing in M, because
        # si(M*/w) and co(M*\w) are the duals of co(M\w) and si(M/w).
        side = sep.Z if sep.orientation == "primal" else sep.W
        return bool(self.n_revealing(key) & side)

    def has_revealing_separator(self, key: str) -> bool:
        return any(self.separator_reveals(s, key) for s in self.separators)

    def separators_containing(self, X: int) -> list[structures.ThetaSeparator]:
        return [s for s in self.separators if s.S & X == X]

    # bases
    @cached_property
    def bases(self) -> list[int]:
        return core.bases_of(self.M)

    def removable(self, B: int) -> int:
        out = 0
        for e in range(self.n):
            ok = self.si3[e] if (B >> e) & 1 else self.co3[e]
            if ok:
                out |= 1 << e
        return out

    def robust(self, key: str, B: int) -> int:
        out = 0
        for e in range(self.n):
            cls = self.contract_classes[e] if (B >> e) & 1 else self.delete_classes[e]
            if key in cls:
                out |= 1 << e
        return out

    def strong(self, key: str, B: int) -> int:
        out = 0
        for e in range(self.n):
            if (B >> e) & 1:
                ok = self.si3[e] and key in self.si_classes[e]
            else:
                ok = self.co3[e] and key in self.co_classes[e]
            if ok:
                out |= 1 << e
        return out

    @cached_property
    def path_width_three(self) -> bool:
        return conn.has_path_width_three(self.M)

    def names(self, mask: int) -> list[int]:
        return elements(mask)
