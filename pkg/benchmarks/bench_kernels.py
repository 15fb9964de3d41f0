#!/usr/bin/env python3
"""Compiled vs pure-Python convex-quadruple kernels.

Both kernels read the same orientation table, so the timings isolate the
O(n^4) loop.  Counts are compared on every run.

    python3 benchmarks/bench_kernels.py [--sizes 24 42 57 ...] [--repeat 3]
"""
import argparse
import random
import sys
import time

from crossnum import _pykernels, kernels
from crossnum.catalog import load_pointset
from crossnum.exact_geom import PointSet


def _random_set(n, seed):
    rng = random.Random(seed)
    while True:
        pts = {(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)) for _ in range(n)}
        if len(pts) == n:
            try:
                return PointSet.from_coords(sorted(pts)).checked()
            except ValueError:
                pass


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[24, 42, 57, 80, 120])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--weighted", action="store_true", help="time the cluster-weighted count")
    args = ap.parse_args(argv)

    if not kernels.compiled_available():
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    from crossnum import _ckernels

    catalog = {24: "K24", 42: "K42", 48: "K48", 51: "K51", 54: "K54", 57: "K57"}
    print(f"{'n':>5} {'source':>8} {'count':>12} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in args.sizes:
        P = load_pointset(catalog[n]) if n in catalog else _random_set(n, n)
        src = catalog.get(n, "random")
        table = kernels.orientation_table(P.ints())
        w = [(i % 4) + 1 for i in range(n)] if args.weighted else None
        a, tp = _best(lambda: _pykernels.convex_count(table, n, w), args.repeat)
        b, tc = _best(lambda: _ckernels.convex_count(table, n, w), args.repeat)
        if a != b:
            print(f"count mismatch at n={n}: {a} vs {b}", file=sys.stderr)
            return 1
        print(f"{n:>5} {src:>8} {a:>12} {tp:>10.4f} {tc:>10.4f} {tp / tc:>8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
