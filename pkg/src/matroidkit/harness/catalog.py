"""Catalog files and generated catalogs of small representable matroids."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import comb

from .. import constructions, core
from ..core import Matroid, MatroidError


class CatalogError(MatroidError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    matroid: Matroid
    source: str
    id: str


FORMATS = ("lex01", "revlex_star")


def parse_line(line: str, fmt: str) -> Matroid:
    parts = line.split()
    if len(parts) != 3:
        raise CatalogError("expected '<n> <r> <bits>'")
    try:
        n, r = int(parts[0]), int(parts[1])
    except ValueError:
        raise CatalogError("n and r must be integers") from None
    bits = parts[2]
    if not 0 <= r <= n <= core.MAX_ELEMENTS:
        raise CatalogError(f"bad sizes n={n} r={r}")
    if len(bits) != comb(n, r):
        raise CatalogError(f"expected {comb(n, r)} flags, got {len(bits)}")
    if fmt == "lex01":
        yes, order = "1", "lex"
    elif fmt == "revlex_star":
        yes, order = "*", "revlex"
    else:
        raise CatalogError(f"unknown format {fmt}")
    allowed = {yes, "0"}
    bad = set(bits) - allowed
    if bad:
        raise CatalogError(f"illegal character {sorted(bad)[0]!r}")
    try:
        return core.from_basis_bits(n, r, bits.replace(yes, "1"), order)
    except CatalogError:
        raise
    except MatroidError as exc:
        raise CatalogError(str(exc)) from None


def emit_line(M: Matroid, fmt: str = "lex01") -> str:
    if fmt == "lex01":
        bits = core.basis_bits(M, "lex")
    elif fmt == "revlex_star":
        bits = core.basis_bits(M, "revlex").replace("1", "*")
    else:
        raise CatalogError(f"unknown format {fmt}")
    return f"{M.n} {M.r} {bits}"


def lex01(M: Matroid) -> str:
    return emit_line(M, "lex01")


def load_catalog(path: str, fmt: str = "lex01", dedupe: bool = True) -> list[CatalogEntry]:
    out = []
    seen = set()
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                M = parse_line(line, fmt)
            except MatroidError as exc:
                raise CatalogError(f"{path}:{lineno}: {exc}") from None
            if dedupe:
                key = core.canonical_key(M)
                if key in seen:
                    continue
                seen.add(key)
            out.append(CatalogEntry(M, f"{path}:{lineno}", f"line{lineno}"))
    return out


def write_catalog(path: str, entries, fmt: str = "lex01") -> None:
    with open(path, "w") as fh:
        for ent in entries:
            M = ent.matroid if isinstance(ent, CatalogEntry) else ent
            fh.write(emit_line(M, fmt) + "\n")


def projective_points(p: int, r: int) -> list[tuple[int, ...]]:
    """Points of PG(r-1, p) as vectors whose first nonzero entry is 1."""
    pts = []
    for v in product(range(p), repeat=r):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def simple_representable(p: int, max_n: int) -> list[tuple[str, Matroid]]:
    """All simple GF(p)-representable matroids on at most ``max_n`` elements.

    Every rank-``r`` member has a representation ``[I_r | D]`` with distinct
    projective points as columns, so growing from ``I_r`` one point at a time
    reaches it.  Deduplicating by canonical form between steps stays complete
    because binary and ternary matroids are uniquely representable.
    """
    if p not in (2, 3):
        raise CatalogError("generated catalogs support GF(2) and GF(3)")
    out = [("gf%d-n0-r0-0000" % p, Matroid(0, b"\x00"))]
    for r in range(1, max_n + 1):
        pts = projective_points(p, r)
        ident = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
        level = {core.canonical_key(core.from_columns(p, r, ident)): ident}
        n = r
        while True:
            for i, (key, cols) in enumerate(sorted(level.items())):
                M = core.from_columns(p, r, cols)
                out.append((f"gf{p}-n{n}-r{r}-{i:04d}", M))
            if n == max_n:
                break
            nxt = {}
            for cols in level.values():
                present = set(cols)
                for pt in pts:
                    if pt in present:
                        continue
                    new = cols + [pt]
                    key = core.canonical_key(core.from_columns(p, r, new))
                    if key not in nxt:
                        nxt[key] = new
            if not nxt:
                break
            level = nxt
            n += 1
    return out


def named_constructions(max_n: int) -> list[tuple[str, Matroid]]:
    out = []
    for n in range(max_n + 1):
        for r in range(n + 1):
            out.append((f"U({r},{n})", constructions.uniform(r, n)))
    for r in range(2, max_n // 2 + 1):
        out.append((f"W({r})", constructions.wheel(r)))
        out.append((f"WHIRL({r})", constructions.whirl(r)))
    for k in range(2, max_n // 2 + 1):
        out.append((f"THETA({k})", constructions.theta(k)[0]))
    for k in range(2, (max_n + 1) // 2 + 1):
        out.append((f"THETA-({k})", constructions.theta_minus(k)[0]))
    if max_n >= 6:
        out.append(("MK4", constructions.mk4()))
    if max_n >= 7:
        out.append(("F7", constructions.fano()))
        out.append(("F7-", constructions.non_fano()))
    if max_n >= 8:
        out.append(("L8", constructions.l8()))
    duals = [(f"{name}*", core.dual(M)) for name, M in out]
    return out + duals


def gen_catalog(p: int, max_n: int, named: bool = True) -> list[CatalogEntry]:
    if max_n > 10:
        raise CatalogError("generated catalogs are limited to 10 elements")
    items = (named_constructions(max_n) if named else []) + simple_representable(p, max_n)
    out = []
    seen = set()
    for ident, M in items:
        key = core.canonical_key(M)
        if key in seen:
            continue
        seen.add(key)
        M = Matroid(M.n, M.table, ident)
        out.append(CatalogEntry(M, f"gen:gf{p}:{max_n}", ident))
    return out


_GEN = re.compile(r"^gen:gf([23]):(\d+)$")


def resolve_catalog(spec: str, fmt: str = "lex01", max_n: int | None = None) -> list[CatalogEntry]:
    """A catalog from a file path, ``gen:gfP:N``, or ``+``-joined mix of both."""
    parts = spec.split("+")
    out = []
    seen = set()
    for part in parts:
        m = _GEN.match(part.strip())
        if m:
            ents = gen_catalog(int(m.group(1)), int(m.group(2)))
        else:
            ents = load_catalog(part.strip(), fmt)
        for ent in ents:
            if max_n is not None and ent.matroid.n > max_n:
                continue
            key = core.canonical_key(ent.matroid)
            if key in seen:
                continue
            seen.add(key)
            out.append(ent)
    return out
