from itertools import combinations

import pytest

from matroidkit import connectivity, constructions, core, structures
from matroidkit.core import MatroidError, mask_of


def test_uniform():
    U24 = constructions.uniform(2, 4)
    assert core.dual(U24) == U24
    assert all(core.is_circuit(U24, mask_of(t)) for t in combinations(range(4), 3))
    assert core.loops(constructions.uniform(0, 1)) == 1
    U25 = constructions.uniform(2, 5)
    assert connectivity.is_3_connected(U25) and U25.n - U25.r == 3
    with pytest.raises(MatroidError):
        constructions.uniform(3, 2)


def test_graphic():
    edges = list(combinations(range(4), 2))
    K4 = constructions.graphic_from_edges(4, edges)
    assert K4 == constructions.mk4()
    # triangles are 3-cycles; triads are the vertex stars (each vertex has degree 3)
    cycles = {mask_of(i for i, ed in enumerate(edges) if set(ed) <= set(t))
              for t in combinations(range(4), 3)}
    stars = {mask_of(i for i, ed in enumerate(edges) if v in ed) for v in range(4)}
    assert K4.r == 3
    assert set(core.triangles(K4)) == cycles and len(cycles) == 4
    assert set(core.triads(K4)) == stars and len(stars) == 4
    tri = constructions.graphic_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert tri == constructions.uniform(2, 3)
    tree = constructions.graphic_from_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert tree == constructions.uniform(3, 3)


def test_wheels_and_whirls():
    assert core.is_isomorphic(constructions.wheel(3), constructions.mk4())
    assert core.is_isomorphic(constructions.whirl(2), constructions.uniform(2, 4))
    W4 = constructions.wheel(4)
    assert (W4.n, W4.r) == (8, 4)
    fans = structures.maximal_fans(W4)
    assert any(len(f) == 8 for f in fans)
    with pytest.raises(MatroidError):
        constructions.wheel(1)
    with pytest.raises(MatroidError):
        constructions.whirl(1)


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_wheels_whirls_3_connected(r):
    assert connectivity.is_3_connected(constructions.wheel(r))
    assert connectivity.is_3_connected(constructions.whirl(r))
    assert not core.is_isomorphic(constructions.wheel(r), constructions.whirl(r))


def test_relax():
    F = constructions.fano()
    for line in core.triangles(F):
        R = constructions.relax(F, line)
        assert (R.n, R.r) == (7, 3)
        assert core.is_isomorphic(R, constructions.non_fano())
    W2 = constructions.wheel(2)
    assert core.is_isomorphic(constructions.relax(W2, constructions.rim(2)),
                              constructions.uniform(2, 4))
    with pytest.raises(MatroidError):
        constructions.relax(F, 0b11)


def test_theta_small():
    T2, _ = constructions.theta(2)
    U12 = constructions.uniform(1, 2)
    assert core.is_isomorphic(T2, core.direct_sum(U12, U12))
    assert core.is_isomorphic(constructions.theta(3)[0], constructions.mk4())
    T3m, lab = constructions.theta_minus(3)
    fans = structures.maximal_fans(T3m)
    assert [len(f) for f in fans] == [5]
    assert len(lab.w) == 2 and len(lab.z) == 3
    with pytest.raises(MatroidError):
        constructions.theta(1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_theta_is_a_matroid(n):
    T, lab = constructions.theta(n)
    assert T.n == 2 * n
    assert sorted(core.circuits_of(T)) == constructions.theta_circuits(n)
    assert lab.W | lab.Z == T.full and not lab.W & lab.Z


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_theta_deletions_agree(n):
    T, lab = constructions.theta(n)
    keys = {core.canonical_key(core.delete(T, 1 << w)) for w in lab.w}
    assert len(keys) == 1
    assert core.canonical_key(constructions.theta_minus(n)[0]) in keys


@pytest.mark.parametrize("n", [3, 4, 5])
def test_theta_segment_cosegment(n):
    T, lab = constructions.theta(n)
    assert T.table[lab.W] == 2
    assert core.corank(T, lab.Z) == 2
    assert lab.W in structures.segments(T)


def test_l8_goldens():
    L = constructions.l8()
    assert (L.n, L.r) == (8, 3)
    assert connectivity.is_3_connected(L)
    X = constructions.l8_mask("x1", "x2", "x3", "x4")
    assert X in structures.segments(L)
    # L8 \ e has a U(2,4) minor containing all of Y plus one more element
    Y = constructions.l8_mask("y1", "y2", "y3")
    e = constructions.L8_INDEX["e"]
    Le = core.delete(L, 1 << e)
    U24 = constructions.uniform(2, 4)
    Ye = core.GroundMap.keeping(8, L.full & ~(1 << e)).image(Y)
    hits = []
    for x in core.elements(Le.full & ~Ye):
        R = Ye | (1 << x)
        rest = Le.full & ~R
        for C in core.submasks(rest):
            if core.is_isomorphic(core.minor(Le, C, rest ^ C)[0], U24):
                hits.append(x)
                break
    assert hits


def test_fano():
    F = constructions.fano()
    assert (F.n, F.r, len(core.triangles(F))) == (7, 3, 7)
    assert connectivity.is_3_connected(F)
    U23 = constructions.uniform(2, 3)
    for e in range(7):
        si = core.simplify(core.contract(F, 1 << e))[0]
        assert core.is_isomorphic(si, U23)


def test_named_families():
    assert constructions.named("U(2,4)") == constructions.uniform(2, 4)
    assert constructions.named("THETA(4)*") == core.dual(constructions.theta(4)[0])
    assert constructions.named(" w(3) ") == constructions.wheel(3)
    assert constructions.element_names("THETA-(3)", 5) == ["w1", "w2", "z1", "z2", "z3"]
    assert constructions.element_names("L8", 8)[4] == "e"
    for bad in ("U(2)", "FOO", "U(5,3)", "((("):
        with pytest.raises(MatroidError):
            constructions.named(bad)
