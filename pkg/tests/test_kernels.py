"""The compiled kernels agree with the pure-Python fallback."""

import random

import pytest

from matroidkit import _pykernels as py
from matroidkit import core, kernels
from matroidkit.constructions import l8, theta, wheel

try:
    from matroidkit import _ckernels as cy
except ImportError:  # pragma: no cover - depends on the build
    cy = None

needs_compiled = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def _random_tables(seed, count=25):
    rng = random.Random(seed)
    out = [l8().table, wheel(4).table, theta(4)[0].table]
    for _ in range(count):
        p = rng.choice((2, 3))
        n = rng.randint(1, 9)
        r = rng.randint(1, min(n, 5))
        cols = [tuple(rng.randrange(p) for _ in range(r)) for _ in range(n)]
        out.append(py.rank_gfp(p, r, cols))
    return out


def test_backend_selected():
    assert kernels.BACKEND in ("compiled", "python")
    if cy is not None:
        assert kernels.BACKEND == "compiled"


@needs_compiled
def test_rank_gfp_parity():
    rng = random.Random(1)
    for _ in range(60):
        p = rng.choice((2, 3, 5, 7))
        r = rng.randint(1, 5)
        n = rng.randint(1, 9)
        cols = [tuple(rng.randrange(p) for _ in range(r)) for _ in range(n)]
        assert bytes(cy.rank_gfp(p, r, cols)) == bytes(py.rank_gfp(p, r, cols))


@needs_compiled
def test_bases_parity():
    for table in _random_tables(2):
        n = len(table).bit_length() - 1
        r = table[-1]
        bases = [m for m in range(1 << n) if m.bit_count() == r and table[m] == r]
        assert bytes(cy.rank_from_bases(n, bases)) == bytes(py.rank_from_bases(n, bases))
        assert cy.exchange_violation(n, bases) == py.exchange_violation(n, bases)
    # {0,1} and {2,3} alone violate basis exchange
    bad = [0b0011, 0b1100]
    assert cy.exchange_violation(4, bad) == py.exchange_violation(4, bad)
    assert py.exchange_violation(4, bad) is not None


@needs_compiled
def test_table_kernels_parity():
    for table in _random_tables(3):
        n = len(table).bit_length() - 1
        assert bytes(cy.dual_rank(table, n)) == bytes(py.dual_rank(table, n))
        full = (1 << n) - 1
        for C in (0, 1, full & 0b101):
            D = full & 0b10 & ~C
            assert bytes(cy.minor_rank(table, n, C, D)) == bytes(py.minor_rank(table, n, C, D))
        for k in (1, 2, 3):
            assert cy.find_separation(table, n, k) == py.find_separation(table, n, k)
        assert list(cy.vertical_triples(table, n)) == list(py.vertical_triples(table, n))
        assert list(cy.element_invariants(table, n)) == list(py.element_invariants(table, n))
        assert list(cy.twin_classes(table, n)) == list(py.twin_classes(table, n))
        for exact in (False, True):
            assert bytes(cy.reach_table(table, n, 0, full, exact)) == bytes(
                py.reach_table(table, n, 0, full, exact))


@needs_compiled
def test_canonical_parity(monkeypatch):
    """Canonical keys are identical whichever backend runs the search."""
    ms = [core.Matroid(len(t).bit_length() - 1, t) for t in _random_tables(4)]
    fast = [core.canonical_key(M) for M in ms]
    core._canonical.cache_clear()
    monkeypatch.setattr(kernels, "canonical_search", py.canonical_search)
    monkeypatch.setattr(kernels, "element_invariants", py.element_invariants)
    monkeypatch.setattr(kernels, "twin_classes", py.twin_classes)
    slow = [core.canonical_key(M) for M in ms]
    core._canonical.cache_clear()
    assert fast == slow
