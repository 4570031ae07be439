"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends run on identical inputs; outputs are compared before timing.
"""

import argparse
import random
import sys
import timeit

from matroidkit import _pykernels as py
from matroidkit import constructions, core

try:
    from matroidkit import _ckernels as cy
except ImportError:
    sys.exit("compiled kernels are not built; reinstall with a C compiler and Cython")


def inputs(seed=3):
    rng = random.Random(seed)
    out = []
    for n in (8, 10, 12):
        r = n // 2
        cols = [tuple(rng.randrange(3) for _ in range(r)) for _ in range(n)]
        M = core.from_columns(3, r, cols)
        out.append((f"GF(3) n={n} r={r}", M, 3, r, cols))
    W = constructions.wheel(5)
    out.append(("W(5)", W, None, None, None))
    return out


def cases(M, p, r, cols):
    n, t = M.n, M.table
    bases = core.bases_of(M)
    full = M.full
    yield "rank_from_bases", lambda k: k.rank_from_bases(n, bases)
    yield "exchange_violation", lambda k: k.exchange_violation(n, bases)
    if cols is not None:
        yield "rank_gfp", lambda k: k.rank_gfp(p, r, cols)
    yield "dual_rank", lambda k: k.dual_rank(t, n)
    yield "minor_rank", lambda k: k.minor_rank(t, n, 1, 2)
    yield "find_separation(3)", lambda k: k.find_separation(t, n, 3)
    yield "vertical_triples", lambda k: k.vertical_triples(t, n)
    yield "reach_table", lambda k: k.reach_table(t, n, 0, full, False)
    yield "element_invariants", lambda k: k.element_invariants(t, n)
    yield "twin_classes", lambda k: k.twin_classes(t, n)


def norm(x):
    if isinstance(x, (bytes, bytearray, memoryview)):
        return bytes(x)
    if isinstance(x, (list, tuple)):
        return [norm(v) for v in x]
    return x


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    print(f"{'input':22s} {'kernel':20s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for label, M, p, r, cols in inputs():
        for name, fn in cases(M, p, r, cols):
            if norm(fn(py)) != norm(fn(cy)):
                sys.exit(f"backends disagree on {name} for {label}")
            tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat)) * 1e3
            tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat)) * 1e3
            print(f"{label:22s} {name:20s} {tp:10.2f} {tc:12.3f} {tp / max(tc, 1e-6):8.0f}x")


if __name__ == "__main__":
    main()
