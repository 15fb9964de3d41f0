"""Crossing counts: cr(P) equals the number of convex 4-subsets of P."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cmp_to_key
from math import comb

from . import kernels
from .exact_geom import DegenerateInputError, PointSet, cross_zsqrt3

__all__ = [
    "CrossingReport",
    "count_crossings_brute",
    "count_crossings_fast",
    "count_crossings",
    "triangles_containing",
]


@dataclass
class CrossingReport:
    total: int
    method: str
    elapsed: float = 0.0
    breakdown: dict = field(default_factory=dict)

    def __int__(self):
        return self.total


def count_crossings_brute(P: PointSet) -> CrossingReport:
    """Check every 4-subset for convex position (compiled kernel when built)."""
    t0 = time.perf_counter()
    n = len(P)
    if n < 4:
        return CrossingReport(0, "brute", time.perf_counter() - t0)
    table = kernels.orientation_table(P.ints())
    total = kernels.convex_count(table, n)
    return CrossingReport(total, "brute", time.perf_counter() - t0)


def _half(v) -> int:
    """0 for directions in [0, pi), 1 for [pi, 2 pi); v = (xa, xb, ya, yb)."""
    from .exact_geom import sign_zsqrt3

    sy = sign_zsqrt3(v[2], v[3])
    if sy > 0:
        return 0
    if sy < 0:
        return 1
    return 0 if sign_zsqrt3(v[0], v[1]) > 0 else 1


def _angle_cmp(u, v) -> int:
    hu, hv = u[0], v[0]
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross_zsqrt3(u[1], v[1])
    if c == 0:
        raise DegenerateInputError("collinear triple during angular sort")
    return -c


def triangles_containing(P: PointSet, i: int) -> int:
    """Number of triangles of P minus p_i that contain p_i."""
    ic = P.ints()
    n = ic.n
    vecs = []
    for j in range(n):
        if j != i:
            v = ic.vec(i, j)
            vecs.append((_half(v), v))
    vecs.sort(key=cmp_to_key(_angle_cmp))
    m = len(vecs)
    # for each q, count the others strictly within the open half-turn ccw of q
    free = 0
    r = 0
    for a in range(m):
        if r < a + 1:
            r = a + 1
        while r < a + m and cross_zsqrt3(vecs[a][1], vecs[r % m][1]) > 0:
            r += 1
        k = r - a - 1
        free += comb(k, 2)
    return comb(m, 3) - free


def count_crossings_fast(P: PointSet) -> CrossingReport:
    """C(n,4) minus the number of (point, enclosing triangle) incidences."""
    t0 = time.perf_counter()
    n = len(P)
    if n < 4:
        return CrossingReport(0, "triangle", time.perf_counter() - t0)
    inside = sum(triangles_containing(P, i) for i in range(n))
    return CrossingReport(comb(n, 4) - inside, "triangle", time.perf_counter() - t0)


def count_crossings(P: PointSet, method: str = "fast") -> CrossingReport:
    if method == "brute":
        return count_crossings_brute(P)
    if method in ("fast", "triangle"):
        return count_crossings_fast(P)
    raise ValueError(f"unknown method {method!r}")
