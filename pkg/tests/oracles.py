"""Reference implementations that share no code with the package.

They work on plain (x, y) tuples of Fractions/ints and are deliberately slow.
"""
from fractions import Fraction
from itertools import combinations


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_size(pts):
    """Number of vertices of the convex hull (monotone chain)."""
    pts = sorted(pts)
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return len(lower) + len(upper) - 2


def convex_quads(pts):
    return sum(1 for q in combinations(pts, 4) if hull_size(q) == 4)


def leq_k_sets(pts, k):
    """Sum over j <= k of j-set counts, via oriented pairs with j-1 points on the left."""
    n = len(pts)
    total = 0
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            left = sum(1 for c in range(n) if c not in (a, b) and _cross(pts[a], pts[b], pts[c]) > 0)
            if left <= k - 1:
                total += 1
    return total


def bichromatic_formula(k, n):
    """Bichromatic (<=k)-critical count of a 3-decomposable n-set."""
    v = n // 3
    if k <= v:
        return 3 * (k + 1) * k // 2
    return 3 * (v + 1) * v // 2 + (k - v) * n


def d0_edges(v, m):
    """Greedy digraph edge count, simulated independently of the package."""
    indeg = [0] * (v + 1)
    edges = 0
    for i in range(1, v + 1):
        d = min(indeg[i] + m, v - i)
        for j in range(i + 1, i + d + 1):
            indeg[j] += 1
        edges += d
    return edges, indeg[1:]


def qstar(m, cr):
    return (24 * Fraction(cr) + 3 * m ** 3 - 7 * m ** 2 + Fraction(30, 7) * m) / Fraction(m) ** 4
