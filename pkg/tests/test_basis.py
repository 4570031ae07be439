import pytest

from matroidkit import basis, connectivity, constructions, core, elasticity, structures
from matroidkit.constructions import uniform
from matroidkit.harness.profile import Profile

U23, U24 = uniform(2, 3), uniform(2, 4)


@pytest.fixture(scope="module")
def hosts(small_catalog):
    return [e.matroid for e in small_catalog
            if 4 <= e.matroid.n <= 7 and connectivity.is_3_connected(e.matroid)]


def test_bases_examples():
    assert len(basis.bases(U24)) == 6
    assert len(basis.bases(constructions.fano())) == 28
    assert basis.bases(uniform(0, 1)) == [0]


def test_u24_all_removable():
    for B in basis.bases(U24):
        assert basis.removable_elements(U24, B) == U24.full


def test_five_fan_with_no_removable_elements():
    # the fan s0 r0 s1 r1 s2 of W(4) is a theta-minus separator of the host
    W4 = constructions.wheel(4)
    F = 0b11111
    assert structures.is_fan(W4, [0, 1, 2, 3, 4])
    assert any(s.S == F for s in structures.theta_separators(W4))
    bad = [B for B in basis.bases(W4) if not basis.removable_elements(W4, B) & F]
    assert core.mask_of([0, 2, 4, 5]) in bad


def test_not_a_basis():
    with pytest.raises(core.MatroidError):
        basis.removable_elements(U24, 0b111)
    with pytest.raises(core.MatroidError):
        basis.nb_robust(constructions.fano(), U23, core.triangles(constructions.fano())[0])


def test_u24_robust_versus_strong():
    # U(2,4)\e is U(2,3) but co(U(2,4)\e) collapses the triangle to a loop
    for B in basis.bases(U24):
        assert basis.nb_robust(U24, U23, B) == U24.full & ~B
        assert basis.nb_strong(U24, U23, B) == 0
        assert basis.nb_strong(U24, uniform(0, 1), B) == U24.full & ~B


def test_elastic_removable_and_strong(hosts):
    for M in hosts:
        ela = elasticity.elastic_elements(M)
        P = Profile(M)
        keys = [k for k in P.conn3_minor_keys if int(k.split(":")[0]) >= 4]
        for B in basis.bases(M):
            rem = basis.removable_elements(M, B)
            assert ela & ~rem == 0
            assert rem == P.removable(B)
            for key in keys:
                N = elasticity.key_matroid(key)
                strong = basis.nb_strong(M, N, B)
                robust = basis.nb_robust(M, N, B)
                assert P.n_elastic(key) & ~strong == 0
                assert strong & ~robust == 0
                assert strong == P.strong(key, B) and robust == P.robust(key, B)
