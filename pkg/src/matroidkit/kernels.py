"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``MATROIDKIT_PURE=1``
forces the pure-Python backend.
"""

import os

from . import _pykernels

if os.environ.get("MATROIDKIT_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

rank_from_bases = _impl.rank_from_bases
exchange_violation = _impl.exchange_violation
rank_gfp = _impl.rank_gfp
minor_rank = _impl.minor_rank
dual_rank = _impl.dual_rank
find_separation = _impl.find_separation
vertical_triples = _impl.vertical_triples
reach_table = _impl.reach_table
element_invariants = _impl.element_invariants
twin_classes = _impl.twin_classes
canonical_search = _impl.canonical_search

__all__ = [
    "BACKEND",
    "rank_from_bases",
    "exchange_violation",
    "rank_gfp",
    "minor_rank",
    "dual_rank",
    "find_separation",
    "vertical_triples",
    "reach_table",
    "element_invariants",
    "twin_classes",
    "canonical_search",
]
