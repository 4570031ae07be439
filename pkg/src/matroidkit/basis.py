"""Removal of elements relative to a fixed basis."""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .connectivity import is_3_connected
from .core import Matroid, MatroidError, popcount
from .elasticity import MinorOracle, co_delete, default_oracle, si_contract


@dataclass(frozen=True)
class BasisContext:
    B: int

    def check(self, M: Matroid) -> None:
        if popcount(self.B) != M.r or M.table[self.B] != M.r:
            raise MatroidError(f"{core.elements(self.B)} is not a basis")


def bases(M: Matroid) -> list[int]:
    return core.bases_of(M)


def removable_elements(M: Matroid, B: int) -> int:
    BasisContext(B).check(M)
    out = 0
    for e in range(M.n):
        if (B >> e) & 1:
            ok = is_3_connected(si_contract(M, e))
        else:
            ok = is_3_connected(co_delete(M, e))
        if ok:
            out |= 1 << e
    return out


def nb_robust(M: Matroid, N: Matroid, B: int, oracle: MinorOracle | None = None) -> int:
    BasisContext(B).check(M)
    oracle = oracle or default_oracle()
    out = 0
    for e in range(M.n):
        b = 1 << e
        child = core.contract(M, b) if B & b else core.delete(M, b)
        if oracle.has_minor(child, N):
            out |= b
    return out


def nb_strong(M: Matroid, N: Matroid, B: int, oracle: MinorOracle | None = None) -> int:
    BasisContext(B).check(M)
    oracle = oracle or default_oracle()
    out = 0
    for e in range(M.n):
        b = 1 << e
        child = si_contract(M, e) if B & b else co_delete(M, e)
        if is_3_connected(child) and oracle.has_minor(child, N):
            out |= b
    return out
