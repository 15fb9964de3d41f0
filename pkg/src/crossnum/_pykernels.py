"""Pure-Python kernels; reference implementation and fallback for the
compiled module ``_ckernels``.

``table`` is a flat ``n*n*n`` signed-byte buffer where entry
``(i*n + j)*n + k`` holds the orientation sign of the triple ``i < j < k``.
A quadruple ``a < b < c < d`` is in convex position exactly when the product
of its four sorted-triple signs is +1.
"""
from __future__ import annotations

BACKEND = "python"


def convex_count(table, n: int, weights=None) -> int:
    """Sum of ``w_a*w_b*w_c*w_d`` over convex quadruples (unit weights if None)."""
    t = table
    w = list(weights) if weights is not None else [1] * n
    total = 0
    for a in range(n - 3):
        wa = w[a]
        for b in range(a + 1, n - 2):
            wab = wa * w[b]
            ab = t[(a * n + b) * n:(a * n + b + 1) * n]
            for c in range(b + 1, n - 1):
                s = ab[c]
                ac = t[(a * n + c) * n + c + 1:(a * n + c + 1) * n]
                bc = t[(b * n + c) * n + c + 1:(b * n + c + 1) * n]
                acc = 0
                for x, y, z, wd in zip(ab[c + 1:], ac, bc, w[c + 1:]):
                    if x * y * z == s:
                        acc += wd
                if acc:
                    total += wab * w[c] * acc
    return total


def nonconvex_by_inner(table, n: int) -> list[int]:
    """For each point, the number of triangles of the others containing it."""
    t = table
    inner = [0] * n
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            for c in range(b + 1, n - 1):
                s1 = t[(a * n + b) * n + c]
                for d in range(c + 1, n):
                    s2 = t[(a * n + b) * n + d]
                    s3 = t[(a * n + c) * n + d]
                    s4 = t[(b * n + c) * n + d]
                    if s1 * s2 * s3 * s4 == 1:
                        continue
                    # exactly one point is inside the triangle of the others
                    if s2 == s1 and s4 == s1:
                        inner[d] += 1
                    elif s3 == s1 and s4 == s1:
                        inner[a] += 1
                    elif s2 == s3 and s3 == s4:
                        inner[b] += 1
                    else:
                        inner[c] += 1
    return inner
