from itertools import permutations

import pytest

from matroidkit import connectivity as conn
from matroidkit import constructions, core, structures
from matroidkit.core import mask_of, popcount
from matroidkit.structures import FanData


def test_segments():
    L = constructions.l8()
    assert constructions.l8_mask("x1", "x2", "x3", "x4") in structures.segments(L)
    assert structures.segments(constructions.uniform(3, 6)) == []
    for n in (3, 4, 5):
        T, lab = constructions.theta(n)
        assert lab.W in structures.segments(T)
        assert lab.Z in structures.cosegments(T)


def test_segments_are_maximal_rank_two():
    for spec in ("L8", "F7", "THETA(5)", "U(2,6)"):
        M = constructions.named(spec)
        segs = structures.segments(M)
        for S in segs:
            assert popcount(S) >= 3 and M.table[S] == 2
            assert all(M.table[S & ~(1 << x)] == 2 for x in core.elements(S))
            for x in range(M.n):
                if not S >> x & 1:
                    # adding x would leave rank 2 only if x is a loop or parallel
                    grows = M.table[S | (1 << x)] == 2 and M.table[1 << x] == 1 and all(
                        M.table[(1 << x) | (1 << y)] == 2 for y in core.elements(S))
                    assert not grows
        assert len(set(segs)) == len(segs)


def test_fan_examples():
    fans = structures.maximal_fans(constructions.theta_minus(3)[0])
    assert len(fans) == 1 and len(fans[0]) == 5
    W4 = constructions.wheel(4)
    assert any(f.mask == W4.full for f in structures.maximal_fans(W4))
    U24 = constructions.uniform(2, 4)
    assert structures.has_4_element_fan(U24)
    assert any(len(f) == 4 for f in structures.maximal_fans(U24))
    assert not structures.has_4_element_fan(constructions.fano())


def test_fan_brute_force_wheel():
    """Every valid 8-sequence of W(4) found by brute force is reported."""
    W4 = constructions.wheel(4)
    data = FanData(W4)
    brute = {p for p in permutations(range(8)) if data.valid(p)}
    assert brute == {o for o in data.orderings() if len(o) == 8}


@pytest.mark.parametrize("spec", ["W(4)", "WHIRL(4)", "THETA-(3)", "THETA-(4)", "U(2,4)", "L8", "MK4"])
def test_maximal_fans_are_maximal(spec):
    M = constructions.named(spec)
    data = FanData(M)
    for f in structures.maximal_fans(M):
        seq = list(f.elements)
        assert structures.is_fan(M, seq)
        assert f.mask in structures.maximal_fan_sets(M)
        for x in range(M.n):
            if x in seq:
                continue
            assert not data.valid(seq + [x]) and not data.valid([x] + seq)
        if len(seq) >= 4:
            first = "spoke" if mask_of(seq[:3]) in data.tri else "rim"
            assert f.ends[0] == first


def test_theta_separator_examples():
    T4, lab = constructions.theta(4)
    seps = structures.theta_separators(T4)
    assert seps and any(s.S == T4.full for s in seps)
    assert structures.theta_separators(constructions.uniform(3, 7)) == []
    assert structures.theta_separators(constructions.l8()) == []


def test_theta_separator_invariants(small_catalog):
    k = {}
    for ent in small_catalog:
        M = ent.matroid
        for s in structures.theta_separators(M):
            assert M.r >= 4 and M.n - M.r >= 4
            assert M.table[s.W] == 2 and core.corank(M, s.Z) == 2 and s.n >= 3
            assert s.n == max(popcount(s.W), popcount(s.Z))
            host = M if s.orientation == "primal" else core.dual(M)
            R = core.restrict(host, s.S)
            want = (constructions.theta(s.n) if s.variant == "full"
                    else constructions.theta_minus(s.n))[0]
            assert core.is_isomorphic(R, want)
            k[ent.id] = k.get(ent.id, 0) + 1
    assert "THETA(4)" in k


def test_swirl_like():
    W4 = constructions.wheel(4)
    fan = (0, 1, 2, 3)
    flower = structures.find_swirl_like_around_fan(W4, fan)
    assert flower is not None and structures.is_swirl_like(W4, flower.petals)
    P = flower.petals
    for i in range(4):
        assert conn.local_connectivity(W4, P[i], P[(i + 1) % 4]) == 1
    assert not structures.is_swirl_like(W4, (0b00000011, 0b00001100, 0b11110000))
    # in a rank-2 host every two disjoint pairs have local connectivity 2
    U28 = constructions.uniform(2, 8)
    assert not structures.is_swirl_like(U28, (0b11, 0b1100, 0b110000, 0b11000000))


def test_k4_extensions():
    K4 = constructions.mk4()
    tri = core.triangles(K4)[0]
    F = tri | (1 << next(e for e in range(6) if not tri >> e & 1))
    ext = structures.k4_extensions(K4, F, 2)
    assert ext == [K4.full & ~F]
