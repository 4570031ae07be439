import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from matroidkit import core  # noqa: E402
from matroidkit.harness import catalog  # noqa: E402


def random_linear(rng, p, r, n):
    """Column matroid of a random ``r x n`` matrix over GF(p)."""
    rows = [[rng.randrange(p) for _ in range(n)] for _ in range(r)]
    return core.from_linear_rep(p, rows)


@pytest.fixture(scope="session")
def small_catalog():
    """gen:gf2:8 + gen:gf3:8, the desk-scale catalog."""
    return catalog.resolve_catalog("gen:gf2:8+gen:gf3:8")


@pytest.fixture
def rng():
    return random.Random(20240611)
