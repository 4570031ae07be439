"""Named matroid families."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product

from . import core
from .core import Matroid, MatroidError, mask_of


@dataclass(frozen=True)
class ThetaLabels:
    """Element indices of the segment (``w``) and cosegment (``z``) parts.

    ``w[i]`` and ``z[i]`` are partners: ``(Z - z[i]) | w[i]`` is a circuit.
    In the minus variant ``w`` has one fewer entry than ``z``.
    """

    w: tuple[int, ...]
    z: tuple[int, ...]

    @property
    def W(self) -> int:
        return mask_of(self.w)

    @property
    def Z(self) -> int:
        return mask_of(self.z)

    def names(self) -> dict[int, str]:
        out = {e: f"w{i + 1}" for i, e in enumerate(self.w)}
        out.update({e: f"z{i + 1}" for i, e in enumerate(self.z)})
        return out


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise MatroidError(f"U({r},{n}) needs 0 <= r <= n")
    table = bytes(min(m.bit_count(), r) for m in range(1 << n))
    return Matroid(n, table, f"U({r},{n})")


def graphic_from_edges(vertex_count: int, edges, label: str | None = None) -> Matroid:
    """Cycle matroid; edge ``i`` of the list becomes element ``i``."""
    cols = []
    for u, v in edges:
        col = [0] * vertex_count
        col[u] ^= 1
        col[v] ^= 1
        cols.append(col)
    return core.from_columns(2, vertex_count, cols, label)


def wheel_edges(r: int) -> list[tuple[int, int]]:
    """Edges of the ``r``-spoke wheel: spoke 0, rim 0, spoke 1, rim 1, ..."""
    edges = []
    for i in range(r):
        edges.append((0, i + 1))
        edges.append((i + 1, (i + 1) % r + 1))
    return edges


def wheel(r: int) -> Matroid:
    if r < 2:
        raise MatroidError("wheels need at least two spokes")
    return graphic_from_edges(r + 1, wheel_edges(r), f"W({r})")


def rim(r: int) -> int:
    return mask_of(range(1, 2 * r, 2))


def whirl(r: int) -> Matroid:
    if r < 2:
        raise MatroidError("whirls need at least two spokes")
    M = relax(wheel(r), rim(r))
    M.label = f"WHIRL({r})"
    return M


def relax(M: Matroid, H: int) -> Matroid:
    """Declare the circuit-hyperplane ``H`` a basis."""
    if not (core.is_circuit(M, H) and core.is_hyperplane(M, H)):
        raise MatroidError(f"{core.elements(H)} is not a circuit-hyperplane")
    return core.from_bases(M.n, core.bases_of(M) + [H])


def mk4() -> Matroid:
    return graphic_from_edges(4, list(combinations(range(4), 2)), "MK4")


def fano() -> Matroid:
    cols = [c for c in product((0, 1), repeat=3) if any(c)]
    cols.sort(key=lambda c: (sum(c), c[::-1]))
    return core.from_columns(2, 3, cols, "F7")


def non_fano() -> Matroid:
    F = fano()
    line = core.triangles(F)[0]
    M = relax(F, line)
    M.label = "F7-"
    return M


def theta_circuits(n: int) -> list[int]:
    """Circuits of the ``2n``-element theta matroid; ``w_i = i``, ``z_i = n + i``."""
    W = list(range(n))
    Z = list(range(n, 2 * n))
    zmask = mask_of(Z)
    out = set()
    for t in combinations(W, 3):
        out.add(mask_of(t))
    for i in range(n):
        out.add((zmask ^ (1 << Z[i])) | (1 << W[i]))
    for i in range(n):
        for j, k in combinations(range(n), 2):
            if i not in (j, k):
                out.add((zmask ^ (1 << Z[i])) | (1 << W[j]) | (1 << W[k]))
    return sorted(out)


def theta(n: int) -> tuple[Matroid, ThetaLabels]:
    if n < 2:
        raise MatroidError("theta needs n >= 2")
    M = core.from_circuits(2 * n, theta_circuits(n), f"THETA({n})")
    return M, ThetaLabels(tuple(range(n)), tuple(range(n, 2 * n)))


def theta_minus(n: int) -> tuple[Matroid, ThetaLabels]:
    """Theta with ``w_n`` deleted; ``w_1..w_{n-1}`` then ``z_1..z_n``."""
    T, _ = theta(n)
    M, _ = core.minor(T, 0, 1 << (n - 1))
    M.label = f"THETA-({n})"
    return M, ThetaLabels(tuple(range(n - 1)), tuple(range(n - 1, 2 * n - 1)))


L8_NAMES = ("x1", "x2", "x3", "x4", "e", "y1", "y2", "y3")
L8_INDEX = {name: i for i, name in enumerate(L8_NAMES)}

# Rank-3 geometry: x1 sits where the x-line meets the y-line; e is the
# meeting point of the lines x2-y2 and x3-y1.
L8_LINES = (
    ("x1", "x2", "x3", "x4"),
    ("x1", "y1", "y2", "y3"),
    ("x2", "e", "y2"),
    ("x3", "e", "y1"),
)


def l8() -> Matroid:
    lines = [mask_of(L8_INDEX[x] for x in line) for line in L8_LINES]
    bases = [
        mask_of(t) for t in combinations(range(8), 3)
        if not any(mask_of(t) & ln == mask_of(t) for ln in lines)
    ]
    return core.from_bases(8, bases, "L8")


def l8_mask(*names: str) -> int:
    return mask_of(L8_INDEX[x] for x in names)


_FAMILY = re.compile(r"^\s*([A-Za-z0-9\-]+?)\s*(?:\(\s*([0-9,\s]*)\s*\))?\s*(\*?)\s*$")


def named(spec: str) -> Matroid:
    """Build a matroid from a family string such as ``U(2,4)`` or ``THETA(4)*``.

    Families: ``U(r,n)``, ``W(r)``/``WHEEL(r)``, ``WHIRL(r)``, ``THETA(n)``,
    ``THETA-(n)``, ``MK4``, ``F7``, ``F7-``, ``L8``.  A trailing ``*`` takes
    the dual.
    """
    m = _FAMILY.match(spec)
    if not m:
        raise MatroidError(f"cannot parse family {spec!r}")
    name = m.group(1).upper()
    args = [int(a) for a in m.group(2).split(",") if a.strip()] if m.group(2) else []
    star = bool(m.group(3))

    def need(k):
        if len(args) != k:
            raise MatroidError(f"{name} takes {k} argument(s)")

    if name == "U":
        need(2)
        M = uniform(*args)
    elif name in ("W", "WHEEL"):
        need(1)
        M = wheel(args[0])
    elif name == "WHIRL":
        need(1)
        M = whirl(args[0])
    elif name == "THETA":
        need(1)
        M = theta(args[0])[0]
    elif name == "THETA-":
        need(1)
        M = theta_minus(args[0])[0]
    elif name in ("MK4", "K4"):
        need(0)
        M = mk4()
    elif name == "F7":
        need(0)
        M = fano()
    elif name == "F7-":
        need(0)
        M = non_fano()
    elif name == "L8":
        need(0)
        M = l8()
    else:
        raise MatroidError(f"unknown family {name}")
    return core.dual(M) if star else M


def element_names(spec: str, n: int) -> list[str]:
    name = spec.strip().upper().rstrip("*").strip()
    if name == "L8":
        return list(L8_NAMES)
    m = re.match(r"^THETA(-?)\s*\(\s*(\d+)\s*\)$", name)
    if m:
        k = int(m.group(2))
        lab = theta_minus(k)[1] if m.group(1) else theta(k)[1]
        names = lab.names()
        return [names[i] for i in range(n)]
    return [str(i) for i in range(n)]
