"""Fans, segments, theta separators and swirl-like flowers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from . import constructions, core
from .connectivity import lam, local_connectivity
from .core import Matroid, elements, mask_of, popcount


# ---------------------------------------------------------------- segments


def segments(M: Matroid) -> list[int]:
    """Maximal sets ``X`` with ``|X| >= 3`` and ``M|X`` uniform of rank 2."""
    t = M.table
    out = set()
    seen_flats = set()
    nonloops = [e for e in range(M.n) if t[1 << e]]
    for i, a in enumerate(nonloops):
        for b in nonloops[i + 1:]:
            pair = (1 << a) | (1 << b)
            if t[pair] != 2:
                continue
            flat = core.closure(M, pair)
            if flat in seen_flats:
                continue
            seen_flats.add(flat)
            classes: list[list[int]] = []
            for e in elements(flat):
                if not t[1 << e]:
                    continue
                for cls in classes:
                    if t[(1 << cls[0]) | (1 << e)] == 1:
                        cls.append(e)
                        break
                else:
                    classes.append([e])
            if len(classes) < 3:
                continue
            for pick in product(*classes):
                out.add(mask_of(pick))
    return sorted(out)


def cosegments(M: Matroid) -> list[int]:
    return segments(core.dual(M))


# ---------------------------------------------------------------- fans


@dataclass(frozen=True)
class FanOrdering:
    elements: tuple[int, ...]
    pattern: tuple[str, ...]

    @property
    def mask(self) -> int:
        return mask_of(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def ends(self) -> tuple[str, str] | None:
        if len(self.elements) < 4:
            return None
        first = "spoke" if self.pattern[0] == "triangle" else "rim"
        last = "spoke" if self.pattern[-1] == "triangle" else "rim"
        return first, last


class FanData:
    """Triangles and triads of a matroid, indexed for fan searches."""

    def __init__(self, M: Matroid):
        self.M = M
        self.tri = frozenset(core.triangles(M))
        self.triad = frozenset(core.triads(M))
        self.both = self.tri | self.triad

    def kind(self, t: int) -> str:
        return "triangle" if t in self.tri else "triad"

    def valid(self, seq) -> bool:
        if len(seq) < 3 or len(set(seq)) != len(seq):
            return False
        trips = [mask_of(seq[i:i + 3]) for i in range(len(seq) - 2)]
        if not all(t in self.both for t in trips):
            return False
        for a, b in zip(trips, trips[1:]):
            if a in self.tri and b not in self.triad:
                return False
            if a in self.triad and b not in self.tri:
                return False
        return True

    def orderings(self) -> list[tuple[int, ...]]:
        """Every valid fan ordering, in increasing lexicographic order."""
        out = []
        n = self.M.n

        def grow(seq, used):
            out.append(tuple(seq))
            prev = mask_of(seq[-3:])
            for f in range(n):
                if (used >> f) & 1:
                    continue
                nxt = mask_of(seq[-2:]) | (1 << f)
                if nxt not in self.both:
                    continue
                if prev in self.tri and nxt not in self.triad:
                    continue
                if prev in self.triad and nxt not in self.tri:
                    continue
                seq.append(f)
                grow(seq, used | (1 << f))
                seq.pop()

        for t in sorted(self.both):
            for p in permutations(elements(t)):
                grow(list(p), t)
        out.sort()
        return out

    def ordering(self, seq) -> FanOrdering:
        trips = [mask_of(seq[i:i + 3]) for i in range(len(seq) - 2)]
        first = self.kind(trips[0])
        other = "triad" if first == "triangle" else "triangle"
        pattern = tuple(first if i % 2 == 0 else other for i in range(len(trips)))
        return FanOrdering(tuple(seq), pattern)


def fan_orderings(M: Matroid) -> list[FanOrdering]:
    data = FanData(M)
    return [data.ordering(s) for s in data.orderings()]


def fan_sets(M: Matroid) -> dict[int, list[tuple[int, ...]]]:
    """Map each fan (as an element set) to all of its valid orderings."""
    data = FanData(M)
    out: dict[int, list[tuple[int, ...]]] = {}
    for s in data.orderings():
        out.setdefault(mask_of(s), []).append(s)
    return out


def maximal_fan_sets(M: Matroid) -> dict[int, list[tuple[int, ...]]]:
    sets = fan_sets(M)
    return {
        F: orders for F, orders in sets.items()
        if not any(G != F and G & F == F for G in sets)
    }


def maximal_fans(M: Matroid) -> list[FanOrdering]:
    """One ordering per maximal fan, the least one up to reversal."""
    data = FanData(M)
    out = []
    for F, orders in sorted(maximal_fan_sets(M).items()):
        best = min(min(o, o[::-1]) for o in orders)
        out.append(data.ordering(best))
    out.sort(key=lambda f: (-len(f), f.elements))
    return out


def is_fan(M: Matroid, seq) -> bool:
    return FanData(M).valid(tuple(seq))


def is_fan_set(M: Matroid, F: int) -> bool:
    data = FanData(M)
    return any(data.valid(p) for p in permutations(elements(F)))


def has_4_element_fan(M: Matroid) -> bool:
    data = FanData(M)
    for t in data.tri:
        for d in data.triad:
            if popcount(t & d) != 2:
                continue
            a, = elements(t & ~d)
            b, c = elements(t & d)
            f, = elements(d & ~t)
            if data.valid((a, b, c, f)) or data.valid((f, b, c, a)):
                return True
    return False


# ---------------------------------------------------------------- theta


@lru_cache(maxsize=None)
def _theta_table(n: int, minus: bool) -> bytes:
    if minus:
        return constructions.theta_minus(n)[0].table
    return constructions.theta(n)[0].table


@dataclass(frozen=True)
class ThetaRestriction:
    """A labelled copy of a theta matroid as a restriction.

    ``seg[i]`` and ``coseg[i]`` follow the partner convention of
    :class:`~matroidkit.constructions.ThetaLabels`.
    """

    seg: tuple[int, ...]
    coseg: tuple[int, ...]
    variant: str

    @property
    def n(self) -> int:
        return len(self.coseg)

    @property
    def seg_mask(self) -> int:
        return mask_of(self.seg)

    @property
    def coseg_mask(self) -> int:
        return mask_of(self.coseg)

    @property
    def S(self) -> int:
        return self.seg_mask | self.coseg_mask


def _restriction_matches(M: Matroid, seg, coseg, minus: bool) -> bool:
    n = len(coseg)
    order = list(seg) + list(coseg)
    t = M.table
    target = _theta_table(n, minus)
    m = len(order)
    old = [0] * (1 << m)
    for j in range(m):
        bit = 1 << j
        img = 1 << order[j]
        for k in range(bit):
            old[bit | k] = old[k] | img
    return all(t[old[i]] == target[i] for i in range(1 << m))


def theta_restrictions(M: Matroid, min_n: int = 3) -> list[ThetaRestriction]:
    """All labelled restrictions isomorphic to a theta or theta-minus matroid.

    Labellings that differ only by an automorphism of the theta matroid that
    fixes the segment and cosegment sets are reported once.
    """
    t = M.table
    found: dict[tuple, ThetaRestriction] = {}
    nmax = (M.n + 1) // 2
    for n in range(min_n, nmax + 1):
        for Z in range(1 << M.n):
            if popcount(Z) != n or t[Z] != n:
                continue
            zs = elements(Z)
            partners = []
            for z in zs:
                base = Z ^ (1 << z)
                cands = [
                    x for x in range(M.n)
                    if not (Z >> x) & 1 and core.is_circuit(M, base | (1 << x))
                ]
                partners.append(cands)
            for minus in (False, True):
                if minus and 2 * n - 1 > M.n:
                    continue
                if not minus and 2 * n > M.n:
                    continue
                slots = range(n) if minus else [None]
                for skip in slots:
                    idx = [i for i in range(n) if i != skip]
                    coseg = [zs[i] for i in idx] + ([zs[skip]] if minus else [])
                    for pick in product(*(partners[i] for i in idx)):
                        if len(set(pick)) != len(pick):
                            continue
                        W = mask_of(pick)
                        if t[W] != 2:
                            continue
                        if not _restriction_matches(M, pick, coseg, minus):
                            continue
                        variant = "minus" if minus else "full"
                        key = (W, Z, variant)
                        if key not in found:
                            found[key] = ThetaRestriction(tuple(pick), tuple(coseg), variant)
    return [found[k] for k in sorted(found)]


@dataclass(frozen=True)
class ThetaSeparator:
    """``W`` has rank 2 and ``Z`` corank 2 in the host.

    In the primal orientation ``M|(W | Z)`` is the theta matroid with segment
    elements ``W``; in the dual orientation ``M*|(W | Z)`` is, with segment
    elements ``Z``.  ``structure`` holds the labelled restriction in whichever
    matroid carries it.
    """

    W: int
    Z: int
    n: int
    variant: str
    orientation: str
    structure: ThetaRestriction

    @property
    def S(self) -> int:
        return self.W | self.Z

    def as_dict(self) -> dict:
        return {
            "W": elements(self.W), "Z": elements(self.Z), "n": self.n,
            "variant": self.variant, "orientation": self.orientation,
        }


def theta_separators(M: Matroid) -> list[ThetaSeparator]:
    if M.r < 4 or M.n - M.r < 4:
        return []
    D = core.dual(M)
    out = {}
    for s in theta_restrictions(M):
        W, Z = s.seg_mask, s.coseg_mask
        if M.table[W] == 2 and core.corank(M, Z) == 2:
            n = max(popcount(W), popcount(Z))
            key = (W, Z, s.variant, "primal")
            out.setdefault(key, ThetaSeparator(W, Z, n, s.variant, "primal", s))
    for s in theta_restrictions(D):
        W, Z = s.coseg_mask, s.seg_mask
        if M.table[W] == 2 and core.corank(M, Z) == 2:
            n = max(popcount(W), popcount(Z))
            key = (W, Z, s.variant, "dual")
            out.setdefault(key, ThetaSeparator(W, Z, n, s.variant, "dual", s))
    return [out[k] for k in sorted(out)]


# ---------------------------------------------------------------- flowers


@dataclass(frozen=True)
class Flower:
    petals: tuple[int, ...]
    kind: str


def is_flower(M: Matroid, petals) -> bool:
    k = len(petals)
    seen = 0
    for p in petals:
        if popcount(p) < 2 or seen & p:
            return False
        seen |= p
    if seen != M.full:
        return False
    for i in range(k):
        if lam(M, petals[i]) > 2 or lam(M, petals[i] | petals[(i + 1) % k]) > 2:
            return False
    return True


def is_swirl_like(M: Matroid, petals) -> bool:
    k = len(petals)
    if k < 4 or not is_flower(M, petals):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j == i + 1 or (i == 0 and j == k - 1)
            want = 1 if adjacent else 0
            if local_connectivity(M, petals[i], petals[j]) != want:
                return False
    return True


def find_swirl_like_around_fan(M: Matroid, fan) -> Flower | None:
    """Search partitions ``(A, {f1, f2}, {f3, f4}, B)`` of the ground set."""
    f = fan.elements if isinstance(fan, FanOrdering) else tuple(fan)
    p2 = (1 << f[0]) | (1 << f[1])
    p3 = (1 << f[2]) | (1 << f[3])
    rest = M.full & ~(p2 | p3)
    for A in core.submasks(rest):
        B = rest ^ A
        if popcount(A) < 2 or popcount(B) < 2:
            continue
        petals = (A, p2, p3, B)
        if is_swirl_like(M, petals):
            return Flower(petals, "swirl_like")
    return None


def k4_extensions(M: Matroid, F: int, extra: int) -> list[int]:
    """Sets ``G`` of ``extra`` elements outside ``F`` with ``M|(F | G)`` a copy
    of M(K4)."""
    k4 = core.canonical_key(constructions.mk4())
    out = []
    rest = M.full & ~F
    for G in core.submasks(rest):
        if popcount(G) != extra:
            continue
        R = core.restrict(M, F | G)
        if R.n == 6 and core.canonical_key(R) == k4:
            out.append(G)
    return out
