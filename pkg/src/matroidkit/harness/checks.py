"""Registry of structural statements checked exhaustively over catalogs.

Each check receives a :class:`Profile` and returns an :class:`Outcome`:
hypothesis instances that hold are *examined*, the rest are *filtered*, and
every examined instance whose conclusion fails yields a violation record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

import numpy as np

from .. import connectivity as conn
from .. import constructions, core, structures
from ..core import elements, mask_of, popcount
from .profile import Profile, key_size

SMALL_N_FAMILIES = ("U(0,1)", "U(1,1)", "U(1,2)", "U(1,3)", "U(2,3)")


@dataclass
class Outcome:
    examined: int = 0
    filtered: int = 0
    violations: list = field(default_factory=list)

    def skip(self, k: int = 1):
        self.filtered += k

    def ok(self, cond: bool, detail_fn) -> None:
        self.examined += 1
        if not cond:
            self.violations.append(detail_fn())


@dataclass(frozen=True)
class Options:
    minors: tuple[str, ...] | None = None  # canonical keys, None = all


@dataclass(frozen=True)
class Check:
    id: str
    scope: str
    run: Callable[[Profile, Options], Outcome]


REGISTRY: dict[str, Check] = {}


def check(cid: str, scope: str):
    def deco(fn):
        REGISTRY[cid] = Check(cid, scope, fn)
        return fn
    return deco


def E(mask: int) -> list[int]:
    return elements(mask)


def sep_dict(s) -> dict:
    return s.as_dict()


def n_keys(p: Profile, opts: Options, min_size: int = 0, max_size: int | None = None):
    """Three-connected minors to quantify over, and how many requested ones
    were not minors."""
    if opts.minors is None:
        pool = p.conn3_minor_keys
        missing = 0
    else:
        pool = [k for k in opts.minors if k in p.minor_keys]
        missing = len(opts.minors) - len(pool)
    keys = [
        k for k in pool
        if key_size(k) >= min_size and (max_size is None or key_size(k) <= max_size)
    ]
    return keys, missing


def not_3conn(p: Profile, out: Outcome) -> bool:
    if not p.conn3:
        out.skip()
        return True
    return False


# ================================================================ theorems


@check("THM-ELASTIC4", "3-connected, |E| >= 4, no 4-element fan, no theta separator: >= 4 elastic elements")
def thm_elastic4(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.n < 4 or p.has_4fan or p.separators:
        out.skip()
        return out
    out.ok(popcount(p.elastic) >= 4, lambda: {"elastic": E(p.elastic)})
    return out


@check("THM-MAIN", "3-connected, no 4-element fan, N a 3-connected minor, no theta separator revealing N, some N-revealing element: >= 2 N-elastic elements")
def thm_main(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.has_4fan:
        out.skip()
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    for key in keys:
        rev = p.n_revealing(key)
        if not rev or p.has_revealing_separator(key):
            out.skip()
            continue
        nel = p.n_elastic(key)
        out.ok(popcount(nel) >= 2, lambda: {
            "N": key, "n_elastic": E(nel), "n_revealing": E(rev)})
    return out


def triggered(p: Profile, keys: list[str]) -> dict:
    """For each maximal vertical separation, the minors ``N`` for which some
    vertical separation ``(X, e, Y)`` below it has ``M/e`` with an ``N``-minor
    meeting ``X`` in at most one element."""
    wanted = set(keys)
    res = {}
    for top in p.vertical_maximal:
        hits = {}
        for s in p.vertical:
            if s.Ye & top.Ye != s.Ye:
                continue
            for k in p.avoid_contract(s.e, s.X) & wanted:
                hits.setdefault(k, s)
        res[top] = hits
    return res


@check("THM-MAXIMAL", "vertical 3-separation with M/e having an N-minor meeting X in <= 1 element; every dominating maximal separation (X', e', Y') has >= 2 N-elastic elements in X' unless X' | e' is a 4-element fan or X' lies in a theta separator revealing N")
def thm_maximal(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    for top, hits in triggered(p, keys).items():
        for key in sorted(hits):
            if p.is_4fan(top.Xe):
                out.skip()
                continue
            if any(p.separator_reveals(s, key) for s in p.separators_containing(top.X)):
                out.skip()
                continue
            nel = p.n_elastic(key) & top.X
            base = hits[key]
            out.ok(popcount(nel) >= 2, lambda: {
                "N": key, "sep": sep_dict(base), "maximal": sep_dict(top),
                "n_elastic_in_X": E(nel)})
    return out


def fan_orders_from(p: Profile, F: int, first: int) -> list[tuple[int, ...]]:
    return [o for o in p.fan_sets.get(F, []) if o[0] == first]


def f3_candidates(p: Profile, F: int, first: int) -> set[int]:
    """Third element of ``F`` (ordered from ``first``) as placed inside a
    5-element fan containing ``F``."""
    cands = set()
    for G, orders in p.fan_sets.items():
        if popcount(G) != 5 or G & F != F:
            continue
        for g in orders:
            for block in (g[:4], g[1:]):
                if mask_of(block) != F:
                    continue
                if block[0] == first:
                    cands.add(block[2])
                elif block[-1] == first:
                    cands.add(block[-3])
    return cands


def flower_or_k4(p: Profile, orders, extra: int) -> dict | None:
    """Witness for a swirl-like flower around one of ``orders`` (in ``M`` or
    ``M*``) or an M(K4) restriction on the fan plus ``extra`` elements."""
    for o in orders:
        for tag, host in (("M", p.M), ("M*", p.D)):
            fl = structures.find_swirl_like_around_fan(host, o)
            if fl is not None:
                return {"flower_in": tag, "petals": [E(x) for x in fl.petals], "fan": list(o)}
    if extra:
        F = mask_of(orders[0]) if orders else 0
        for tag, host in (("M", p.M), ("M*", p.D)):
            ext = structures.k4_extensions(host, F, extra)
            if ext:
                return {"k4_in": tag, "extra": E(ext[0])}
    return None


@check("THM-FANS", "r, r* >= 4; a dominating maximal separation whose X' | e' is a 4-element fan (f1 = e'): elastic pattern by fan extension, and the flower / M(K4) alternative when no element is elastic")
def thm_fans(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.r < 4 or p.rstar < 4:
        out.skip()
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    for top, hits in triggered(p, keys).items():
        F = top.Xe
        if not p.is_4fan(F):
            out.skip(len(hits))
            continue
        orders = fan_orders_from(p, F, top.e)
        bigger = [G for G in p.fan_sets if G != F and G & F == F]
        ext6 = any(popcount(G) >= 6 for G in bigger)
        ext5 = any(popcount(G) == 5 for G in bigger)
        el = p.elastic & F
        for key in sorted(hits):
            nel = p.n_elastic(key)
            if ext6:
                good = el == 0
                case = "i"
            elif ext5:
                cands = f3_candidates(p, F, top.e)
                good = el == 0 or any(el == 1 << f and (nel >> f) & 1 for f in cands)
                case = "ii"
            else:
                mids = {mask_of(o[1:3]) for o in orders}
                good = el == 0 or any(el == m and nel & m == m for m in mids)
                case = "iii"
            witness = None
            if good and el == 0:
                witness = flower_or_k4(p, orders, 2)
                good = witness is not None
            out.ok(good, lambda: {
                "N": key, "maximal": sep_dict(top), "case": case,
                "elastic_in_F": E(el), "n_elastic_in_F": E(nel & F),
                "orders": [list(o) for o in orders]})
    return out


@check("THM-PW3", "3-connected, no 4-element fan, no theta separator, exactly four elastic elements: path-width three")
def thm_pw3(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.has_4fan or p.separators or popcount(p.elastic) != 4:
        out.skip()
        return out
    out.ok(p.path_width_three, lambda: {"elastic": E(p.elastic)})
    return out


def path_orders(p: Profile, start: int, pool: int):
    """Reach table for paths ``(start, {e1}, ..., {ek}, rest)`` and the set of
    possible last elements."""
    reach = conn.sequential_reach(p.M, start, pool, exact=True)
    last = [f for f in elements(pool) if reach[(start | pool) ^ (1 << f)]]
    return reach, last


@check("THM-MINELTS2", "3-connected, no 4-element fan, |E(N)| >= 4, no theta separator revealing N, exactly two N-elastic elements: the N-revealing set K orders into a path of 3-separations, and every non-final e_i has N-minors in M/e_i and M\\e_i")
def thm_minelts2(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.has_4fan:
        out.skip()
        return out
    keys, missing = n_keys(p, opts, min_size=4)
    out.skip(missing)
    for key in keys:
        nel = p.n_elastic(key)
        if popcount(nel) != 2 or p.has_revealing_separator(key):
            out.skip()
            continue
        K = p.n_revealing(key)
        rest = p.M.full & ~(K | nel)
        ok = rest != 0 and p.lam[nel] == 2
        bad = []
        if ok:
            reach, last = path_orders(p, nel, K)
            if not reach[nel | K]:
                ok = False
            elif K:
                movable = K if len(last) >= 2 else K & ~(1 << last[0])
                for e in elements(movable):
                    if key not in p.contract_classes[e] or key not in p.delete_classes[e]:
                        bad.append(e)
                ok = not bad
        out.ok(ok, lambda: {"N": key, "s": E(nel), "K": E(K), "no_minor": bad})
    return out


@check("PROP-SMALLN", "3-connected, no 4-element fan, no theta separator, r, r* >= 3, |E| >= 8, N one of U(0,1), U(1,1), U(1,2), U(1,3), U(2,3): >= 4 N-elastic elements, path-width three when exactly four")
def prop_smalln(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if (not p.conn3 or p.has_4fan or p.separators or p.r < 3 or p.rstar < 3
            or p.n < 8):
        out.skip(len(SMALL_N_FAMILIES))
        return out
    for fam in SMALL_N_FAMILIES:
        key = core.canonical_key(constructions.named(fam))
        nel = p.n_elastic(key)
        good = popcount(nel) >= 4 and (popcount(nel) != 4 or p.path_width_three)
        out.ok(good, lambda: {"N": fam, "n_elastic": E(nel)})
    return out


def ww_hyp(p: Profile) -> bool:
    return p.conn3 and not p.has_4fan and p.n >= 4


@check("WW-LB4", "3-connected, no 4-element fan, |E| >= 4: every basis leaves >= 4 removable elements")
def ww_lb4(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not ww_hyp(p):
        out.skip()
        return out
    for B in p.bases:
        rem = p.removable(B)
        out.ok(popcount(rem) >= 4, lambda: {"B": E(B), "removable": E(rem)})
    return out


@check("WW-PW3", "3-connected, no 4-element fan, |E| >= 4, a basis with exactly four removable elements: path-width three")
def ww_pw3(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not ww_hyp(p):
        out.skip()
        return out
    for B in p.bases:
        rem = p.removable(B)
        if popcount(rem) != 4:
            out.skip()
            continue
        out.ok(p.path_width_three, lambda: {"B": E(B), "removable": E(rem)})
    return out


@check("WW-EXISTS5", "3-connected, no 4-element fan, |E| >= 4: some basis has >= 5 removable elements")
def ww_exists5(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not ww_hyp(p):
        out.skip()
        return out
    best = max(popcount(p.removable(B)) for B in p.bases)
    out.ok(best >= 5, lambda: {"max_removable": best})
    return out


def robust_instances(p: Profile, opts: Options, out: Outcome):
    if not p.conn3 or p.has_4fan or p.n < 5:
        out.skip()
        return
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    for key in keys:
        for B in p.bases:
            yield key, B, p.robust(key, B), p.strong(key, B)


@check("THM-ROBUST-I", "3-connected, no 4-element fan, |E| >= 5, N a 3-connected minor, B a basis: two (N,B)-robust elements force two (N,B)-strong elements")
def thm_robust_i(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    for key, B, rob, strong in robust_instances(p, opts, out):
        if popcount(rob) < 2:
            out.skip()
            continue
        out.ok(popcount(strong) >= 2, lambda: {
            "N": key, "B": E(B), "robust": E(rob), "strong": E(strong)})
    return out


@check("THM-ROBUST-II", "as THM-ROBUST-I; exactly two (N,B)-strong elements: (P, E - P) is a sequential 3-separation for P the (N,B)-robust set")
def thm_robust_ii(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    for key, B, rob, strong in robust_instances(p, opts, out):
        if popcount(strong) != 2:
            out.skip()
            continue
        out.ok(conn.is_sequential_3_separation(p.M, rob), lambda: {
            "N": key, "B": E(B), "robust": E(rob), "strong": E(strong)})
    return out


# ================================================================ lemmas


@check("LEM-BIXBY", "3-connected: for every e, si(M/e) or co(M\\e) is 3-connected")
def lem_bixby(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    for e in range(p.n):
        out.ok(p.si3[e] or p.co3[e], lambda: {"e": e})
    return out


@check("LEM-UNCROSS", "k-connected (k = 2, 3), X and Y k-separating: union and intersection stay k-separating under the size conditions")
def lem_uncross(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    n = p.n
    size = 1 << n
    lam = np.array(p.lam, dtype=np.int16)
    masks = np.arange(size, dtype=np.int64)
    pc = np.array([m.bit_count() for m in range(size)], dtype=np.int16)
    full = size - 1
    for k, good in ((2, p.connected), (3, p.conn3)):
        if not good:
            out.skip()
            continue
        seps = masks[lam <= k - 1]
        for X in seps.tolist():
            inter = seps & X
            union = seps | X
            cond1 = pc[inter] >= k - 1
            bad1 = cond1 & (lam[union] > k - 1)
            cond2 = pc[full ^ union] >= k - 1
            bad2 = cond2 & (lam[inter] > k - 1)
            out.examined += int(cond1.sum() + cond2.sum())
            for Y in seps[bad1 | bad2].tolist():
                out.violations.append({"k": k, "X": E(X), "Y": E(Y)})
    return out


@check("LEM-ORTH", "every partition (X, {e}, Y): e in cl(X) iff e not in cl*(Y)")
def lem_orth(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    t = np.frombuffer(p.M.table, dtype=np.uint8).astype(np.int16)
    td = np.frombuffer(p.D.table, dtype=np.uint8).astype(np.int16)
    full = p.M.full
    masks = np.arange(1 << p.n, dtype=np.int64)
    for e in range(p.n):
        eb = 1 << e
        X = masks[(masks & eb) == 0]
        Y = (full ^ eb) ^ X
        in_cl = t[X | eb] == t[X]
        in_cocl = td[Y | eb] == td[Y]
        bad = in_cl == in_cocl
        out.examined += len(X)
        for x in X[bad].tolist():
            out.violations.append({"e": e, "X": E(x)})
    return out


@check("LEM-3SEP1", "3-connected, X exactly 3-separating, e outside X: X | e is 3-separating iff e in cl(X) | cl*(X)")
def lem_3sep1(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    t, td = p.M.table, p.D.table
    for X in range(1 << p.n):
        if p.lam[X] != 2:
            continue
        for e in range(p.n):
            eb = 1 << e
            if X & eb:
                continue
            lhs = p.lam[X | eb] <= 2
            rhs = t[X | eb] == t[X] or td[X | eb] == td[X]
            out.ok(lhs == rhs, lambda: {"X": E(X), "e": e})
    return out


@check("LEM-3SEP2", "3-connected, (X, Y) exactly 3-separating, |X| >= 3, e in X: (X - e, Y | e) exactly 3-separating iff e lies in exactly one of cl(X-e) & cl(Y) and cl*(X-e) & cl*(Y)")
def lem_3sep2(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    t, td = p.M.table, p.D.table
    full = p.M.full
    for X in range(1 << p.n):
        if p.lam[X] != 2 or popcount(X) < 3:
            continue
        Y = full ^ X
        for e in elements(X):
            eb = 1 << e
            Xe = X ^ eb
            lhs = p.lam[Xe] == 2
            a = t[Xe | eb] == t[Xe] and t[Y | eb] == t[Y]
            b = td[Xe | eb] == td[Xe] and td[Y | eb] == td[Y]
            out.ok(lhs == (a != b), lambda: {"X": E(X), "e": e})
    return out


@check("LEM-VERT1", "3-connected: si(M/e) fails 3-connectivity iff some vertical 3-separation has centre e; dually for co(M\\e) and cyclic 3-separations")
def lem_vert1(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    vc = {s.e for s in p.vertical}
    cc = {s.e for s in p.cyclic}
    for e in range(p.n):
        out.ok((not p.si3[e]) == (e in vc), lambda: {"e": e, "side": "vertical"})
        out.ok((not p.co3[e]) == (e in cc), lambda: {"e": e, "side": "cyclic"})
    return out


@check("LEM-VERT2", "3-connected: closing off a vertical (cyclic) 3-separation with cl (cl*) gives another one")
def lem_vert2(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    for seps, host in ((p.vertical, p.M), (p.cyclic, p.D)):
        for s in seps:
            c = conn.close_off(p.M, s)
            ok = conn.is_vertical_3_separation(host, c.X, c.e, c.Y)
            out.ok(ok, lambda: {"sep": sep_dict(s), "closed": sep_dict(c)})
    return out


@check("LEM-SEGDEL", "3-connected, L a segment with >= 4 elements, l in L: M\\l is 3-connected")
def lem_segdel(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    for L in structures.segments(p.M):
        if popcount(L) < 4:
            continue
        for l in elements(L):
            ok = conn.is_3_connected(core.delete(p.M, 1 << l))
            out.ok(ok, lambda: {"segment": E(L), "l": l})
    return out


@check("LEM-TRIANGLE", "3-connected, C* a rank-3 cocircuit, e in C* with cl(C*) - e containing a triangle of M/e: si(M/e) is 3-connected")
def lem_triangle(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    t = p.M.table
    for C in core.cocircuits(p.M):
        if t[C] != 3:
            continue
        cl = core.closure(p.M, C)
        for e in elements(C):
            eb = 1 << e
            re = t[eb]
            found = None
            for tri in combinations(elements(cl & ~eb), 3):
                T = mask_of(tri)
                if t[T | eb] - re != 2:
                    continue
                if all(t[(T ^ (1 << x)) | eb] - re == 2 for x in tri):
                    found = T
                    break
            if found is None:
                out.skip()
                continue
            out.ok(p.si3[e], lambda: {"cocircuit": E(C), "e": e, "triangle": E(found)})
    return out


def retained_classes(p: Profile) -> dict[int, frozenset]:
    """For each retained set ``R``, keys of minors with ground set exactly ``R``."""
    out = {}
    for R in range(1 << p.n):
        gone = p.M.full ^ R
        acc = set()
        for C in core.submasks(gone):
            m = core.minor(p.M, C, gone ^ C)[0]
            acc.add(core.canonical_key(m))
        out[R] = frozenset(acc)
    return out


@check("LEM-2SEP", "connected, (X, Y) a 2-separation, N a 3-connected minor: every realization of N meets X or Y in <= 1 element, and each u of such a side keeps an N-minor in M/u, M\\u when those are connected")
def lem_2sep(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.connected:
        out.skip()
        return out
    seps = conn.k_separations(p.M, 2)
    if not seps:
        out.skip()
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    realized = retained_classes(p)
    full = p.M.full
    c_conn = [conn.is_connected(core.contract(p.M, 1 << u)) for u in range(p.n)]
    d_conn = [conn.is_connected(core.delete(p.M, 1 << u)) for u in range(p.n)]
    for key in keys:
        witnesses = [R for R, ks in realized.items() if key in ks]
        for X in seps:
            Y = full ^ X
            for R in witnesses:
                small = [U for U in (X, Y) if popcount(U & R) <= 1]
                out.ok(bool(small), lambda: {"N": key, "X": E(X), "retained": E(R)})
                for U in small:
                    for u in elements(U):
                        ok = ((not c_conn[u] or key in p.contract_classes[u])
                              and (not d_conn[u] or key in p.delete_classes[u]))
                        out.ok(ok, lambda: {"N": key, "U": E(U), "u": u, "retained": E(R)})
    return out


def closed_vertical(p: Profile):
    for s in p.vertical:
        if core.closure(p.M, s.Ye) == s.Ye:
            yield s


@check("LEM-BS45", "vertical 3-separation with Y | e closed and M/e having an N-minor meeting X in <= 1 element: M/x has an N-minor for all x in X, at most one x' in X has M\\x' without one, and then x' in cl*(Y), e in cl(X - x')")
def lem_bs45(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    td, t = p.D.table, p.M.table
    for s in closed_vertical(p):
        hit = p.avoid_contract(s.e, s.X)
        for key in keys:
            if key not in hit:
                out.skip()
                continue
            xs = elements(s.X)
            contr = all(key in p.contract_classes[x] for x in xs)
            bad = [x for x in xs if key not in p.delete_classes[x]]
            ok = contr and len(bad) <= 1
            if ok and bad:
                x = bad[0]
                xb = 1 << x
                ok = (td[s.Y | xb] == td[s.Y]
                      and t[(s.X ^ xb) | (1 << s.e)] == t[s.X ^ xb])
            out.ok(ok, lambda: {"N": key, "sep": sep_dict(s), "no_delete_minor": bad,
                                "all_contract": contr})
    return out


@check("LEM-SMALLN1", "3-connected, r, r* >= 4, N a 3-connected minor with <= 3 elements: every elastic element is N-elastic")
def lem_smalln1(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.r < 4 or p.rstar < 4:
        out.skip()
        return out
    keys, missing = n_keys(p, opts, max_size=3)
    out.skip(missing)
    for key in keys:
        nel = p.n_elastic(key)
        out.ok(p.elastic & ~nel == 0, lambda: {"N": key, "elastic": E(p.elastic), "n_elastic": E(nel)})
    return out


@check("LEM-NELASTIC", "3-connected, r* >= 4, vertical 3-separation with Y | e closed and M/e having an N-minor meeting X in <= 1 element: elastic elements of X are N-elastic")
def lem_nelastic(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.rstar < 4:
        out.skip()
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    for s in closed_vertical(p):
        hit = p.avoid_contract(s.e, s.X)
        for key in keys:
            if key not in hit:
                out.skip()
                continue
            el = p.elastic & s.X
            nel = p.n_elastic(key)
            out.ok(el & ~nel == 0, lambda: {"N": key, "sep": sep_dict(s), "elastic": E(el), "n_elastic": E(nel)})
    return out


@check("LEM-CORANK3", "3-connected rank-3, cyclic 3-separation with M\\e having an N-minor meeting X in <= 1 element, X | e not a 4-element fan: at most one x in X is not N-elastic, and it lies in cl(Y)")
def lem_corank3(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.r != 3:
        out.skip()
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    for s in p.cyclic:
        hit = p.avoid_delete(s.e, s.X)
        four = p.is_4fan(s.Xe)
        for key in keys:
            if key not in hit or four:
                out.skip()
                continue
            rest = s.X & ~p.n_elastic(key)
            ok = popcount(rest) <= 1
            if ok and rest:
                ok = core.closure(p.M, s.Y) & rest == rest
            out.ok(ok, lambda: {"N": key, "sep": sep_dict(s), "not_n_elastic": E(rest)})
    return out


@check("LEM-FAN-ELASTIC", "3-connected, r, r* >= 4, F a maximal fan: elastic elements of F by length (none for >= 6; only f3 for 5; only f2, f3 for 4), and the flower / M(K4) alternative when none")
def lem_fan_elastic(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or p.r < 4 or p.rstar < 4:
        out.skip()
        return out
    for F, orders in sorted(p.maximal_fan_sets.items()):
        k = popcount(F)
        if k < 4:
            out.skip()
            continue
        el = p.elastic & F
        if k >= 6:
            good = el == 0
        elif k == 5:
            good = el == 0 or any(el == 1 << o[2] for o in orders)
        else:
            good = el == 0 or any(el == mask_of(o[1:3]) for o in orders)
        witness = None
        if good and el == 0 and k in (4, 5):
            witness = flower_or_k4(p, orders, 1 if k == 5 else 0)
            good = witness is not None
        out.ok(good, lambda: {"fan": E(F), "elastic": E(el), "orders": [list(o) for o in orders[:4]]})
    return out


def primal_separators(p: Profile):
    return [s for s in p.separators if s.orientation == "primal"]


@check("LEM-EXCEPTION", "theta separator S with M|S a theta matroid: si(M/w) not 3-connected for w in W; co(M\\z) not 3-connected for z in Z unless no x in cl(W) completes (Z - z) | x to a circuit")
def lem_exception(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    seps = primal_separators(p)
    if not seps:
        out.skip()
    for s in seps:
        W, Z = s.W, s.Z
        clW = core.closure(p.M, W)
        for w in elements(W):
            out.ok(not p.si3[w], lambda: {"separator": s.as_dict(), "w": w})
        for z in elements(Z):
            base = Z ^ (1 << z)
            exists = any(core.is_circuit(p.M, base | (1 << x)) for x in elements(clW))
            if not exists:
                out.skip()
                continue
            out.ok(not p.co3[z], lambda: {"separator": s.as_dict(), "z": z})
    return out


@check("LEM-THETA-ELASTIC", "theta separator S with M|S a theta matroid: no elastic element in S for the full variant; exactly one for the minus variant unless M|(S | e) is the full theta matroid for some e")
def lem_theta_elastic(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    seps = primal_separators(p)
    if not seps:
        out.skip()
    for s in seps:
        el = p.elastic & s.S
        if s.variant == "full":
            out.ok(el == 0, lambda: {"separator": s.as_dict(), "elastic": E(el)})
            continue
        full_key = core.canonical_key(constructions.theta(s.n)[0])
        completes = [
            e for e in range(p.n)
            if not (s.S >> e) & 1
            and core.canonical_key(core.restrict(p.M, s.S | (1 << e))) == full_key
        ]
        if completes:
            out.skip()
            continue
        out.ok(popcount(el) == 1, lambda: {"separator": s.as_dict(), "elastic": E(el)})
    return out


@check("LEM-ELASTIC1", "3-connected, (X, e, Y) vertical with Y | e maximal, X | e not a 4-element fan, X in no theta separator: >= 2 elastic elements in X")
def lem_elastic1(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    for s in p.vertical_maximal:
        if p.is_4fan(s.Xe) or p.separators_containing(s.X):
            out.skip()
            continue
        el = p.elastic & s.X
        out.ok(popcount(el) >= 2, lambda: {"sep": sep_dict(s), "elastic": E(el)})
    return out


@check("LEM-THETAMAX", "3-connected, (X, e, Y) vertical with Y | e maximal, X inside a theta separator S: X is a rank-3 cocircuit with the dual structure on S, or X | e is a circuit and X lies among the cosegment elements of M|S")
def lem_thetamax(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    t = p.M.table
    for s in p.vertical_maximal:
        Ss = sorted({sep.S for sep in p.separators_containing(s.X)})
        if not Ss:
            out.skip()
            continue
        X, e = s.X, s.e
        rank3_cocircuit = core.is_cocircuit(p.M, X) and t[X] == 3
        circuit = core.is_circuit(p.M, s.Xe)
        for S in Ss:
            ok = False
            if rank3_cocircuit:
                for st in p.dual_restrictions:
                    if st.S != S or st.n != popcount(s.Xe) - 1:
                        continue
                    for x in elements(X & st.seg_mask):
                        if (X ^ (1 << x)) | (1 << e) == st.coseg_mask:
                            ok = True
            if not ok and circuit:
                for st in p.restrictions:
                    if st.S != S or st.n not in (popcount(X), popcount(X) + 1):
                        continue
                    if st.coseg_mask & X == X:
                        ok = True
            out.ok(ok, lambda: {"sep": sep_dict(s), "S": E(S),
                                "rank3_cocircuit": rank3_cocircuit, "circuit": circuit})
    return out


@check("LEM-THETA-REVEAL", "3-connected, r, r* >= 4, theta separator S with segment set W and cosegment set Z (taken in M* for the dual orientation), N a 3-connected minor: (i) some z is N-revealing, (ii) co(M\\z) has an N-minor for two z, (iii) si(M/z), co(M\\z) for all z and co(M\\w) for all w have N-minors, are equivalent, and all hold when |E(N)| <= 3")
def lem_theta_reveal(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not p.conn3 or not p.separators:
        out.skip()
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    for s in p.separators:
        if s.orientation == "primal":
            zs, ws = elements(s.Z), elements(s.W)
            co_z, si_z, co_w = p.co_classes, p.si_classes, p.co_classes
        else:
            # the statement read in M* with N*: co(M*\x) and si(M*/x) have
            # N*-minors exactly when si(M/x) and co(M\x) have N-minors
            zs, ws = elements(s.W), elements(s.Z)
            co_z, si_z, co_w = p.si_classes, p.co_classes, p.si_classes
        for key in keys:
            i = any((p.n_revealing(key) >> z) & 1 for z in zs)
            ii = sum(key in co_z[z] for z in zs) >= 2
            iii = (all(key in si_z[z] and key in co_z[z] for z in zs)
                   and all(key in co_w[w] for w in ws))
            ok = i == ii == iii and (key_size(key) > 3 or i)
            out.ok(ok, lambda: {"N": key, "separator": s.as_dict(),
                                "i": i, "ii": ii, "iii": iii})
    return out


@check("LEM-THETA-A", "theta separator W | Z with >= 6 elements, any basis B: |cl(W) - B| >= |cl(W)| - 2 and co(M\\w) 3-connected on cl(W); |B & cl*(Z)| >= |cl*(Z)| - 2 and si(M/z) 3-connected on cl*(Z)")
def lem_theta_a(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    seps = [s for s in p.separators if popcount(s.S) >= 6]
    if not seps:
        out.skip()
    for s in seps:
        clW = core.closure(p.M, s.W)
        clZ = core.coclosure(p.M, s.Z)
        ok_w = all(p.co3[w] for w in elements(clW))
        ok_z = all(p.si3[z] for z in elements(clZ))
        out.ok(ok_w and ok_z, lambda: {"separator": s.as_dict(), "clW": E(clW), "clZ": E(clZ)})
        for B in p.bases:
            good = (popcount(clW & ~B) >= popcount(clW) - 2
                    and popcount(B & clZ) >= popcount(clZ) - 2)
            out.ok(good, lambda: {"separator": s.as_dict(), "B": E(B)})
    return out


@check("LEM-THETA-B", "theta separator S with >= 6 elements revealing N, any basis B: >= |S| - 4 elements of S are (N,B)-strong")
def lem_theta_b(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    seps = [s for s in p.separators if popcount(s.S) >= 6]
    if not seps:
        out.skip()
        return out
    keys, missing = n_keys(p, opts)
    out.skip(missing)
    for s in seps:
        for key in keys:
            if not p.separator_reveals(s, key):
                out.skip()
                continue
            for B in p.bases:
                st = p.strong(key, B) & s.S
                out.ok(popcount(st) >= popcount(s.S) - 4, lambda: {
                    "separator": s.as_dict(), "N": key, "B": E(B), "strong_in_S": E(st)})
    return out


def _prefix_path(p: Profile, W: int) -> bool:
    """Whether ``W`` orders as ``(a, b, w3, ..., wm)`` with every prefix of
    size at least two exactly 3-separating."""
    lam = p.lam
    memo = {}

    def down(mask):
        # can ``mask`` be peeled one element at a time down to a pair?
        if popcount(mask) == 2:
            return lam[mask] == 2
        if mask in memo:
            return memo[mask]
        res = lam[mask] == 2 and any(down(mask ^ (1 << x)) for x in elements(mask))
        memo[mask] = res
        return res

    return popcount(W) >= 2 and down(W)


@check("LEM-BS61", "3-connected, (X, Y) with |X|, |Y| >= 2: sequential 3-separation iff a path (P0, {e1}, ..., {ek}, U) with |P0| = 2 exists for U in {X, Y}")
def lem_bs61(p: Profile, opts: Options) -> Outcome:
    out = Outcome()
    if not_3conn(p, out):
        return out
    full = p.M.full
    for X in range(2, full, 2):
        Y = full ^ X
        if popcount(X) < 2 or popcount(Y) < 2:
            continue
        lhs = conn.is_sequential_3_separation(p.M, X)
        rhs = _prefix_path(p, Y) or _prefix_path(p, X)
        out.ok(lhs == rhs, lambda: {"X": E(X), "sequential": lhs, "path": rhs})
    return out


def check_ids() -> list[str]:
    return list(REGISTRY)
