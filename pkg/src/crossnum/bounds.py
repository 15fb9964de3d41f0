"""Closed-form bounds on (<=k)-sets of 3-decomposable sets and the greedy
digraph that attains the extremal edge count.

All arithmetic is exact.  ``n`` is the number of points (a multiple of 3),
``v = n/3`` and ``m = n - 2k - 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

__all__ = [
    "binom2_formal",
    "c_j",
    "s_of",
    "B",
    "STU",
    "stu",
    "DkDigraph",
    "d0_digraph",
    "indegree_formula",
    "E",
    "lemma_margin",
    "series_partial_sum",
    "series_limit",
    "lower_bound_constant",
]


def binom2_formal(r) -> Fraction:
    """r(r-1)/2 for r >= 2, else 0."""
    r = Fraction(r)
    return r * (r - 1) / 2 if r >= 2 else Fraction(0)


def c_j(j: int) -> Fraction:
    return Fraction(1, 2) - Fraction(1, 3 * j * (j + 1))


def _check_nk(k: int, n: int) -> None:
    if n <= 0 or n % 3:
        raise ValueError("n must be a positive multiple of 3")
    if not 1 <= k or not 2 * k < n:
        raise ValueError("need 1 <= k < n/2")


def s_of(k: int, n: int) -> int | float:
    """The s with C(s,2) < n/(3m) <= C(s+1,2); infinite when m = 0."""
    _check_nk(k, n)
    m = n - 2 * k - 1
    if m == 0:
        return math.inf
    ratio = Fraction(n, 3 * m)
    s = 1
    while comb(s + 1, 2) < ratio:
        s += 1
    return s


def B(k: int, n: int) -> Fraction:
    """Lower bound on the number of (<=k)-sets of a 3-decomposable n-set."""
    _check_nk(k, n)
    total = 3 * binom2_formal(k + 1) + 3 * binom2_formal(k + 1 - Fraction(n, 3))
    s = s_of(k, n)
    # for m = 0 every term with k > c_j n - 1/2 survives; those are finitely many
    j = 2
    while j <= s - 1:
        term = binom2_formal(k + 1 - c_j(j) * n)
        if term == 0 and s == math.inf:
            break
        total += 3 * j * (j + 1) * term
        j += 1
    return total


@dataclass(frozen=True)
class STU:
    S: int
    T: int
    U: int


def stu(i: int, m: int) -> STU:
    """Unique S, T, U with i = 1 + m C(S,2) + S T + U, 0 <= T < m, 0 <= U < S."""
    if i < 1 or m < 1:
        raise ValueError("need i >= 1 and m >= 1")
    S = 1
    while m * comb(S + 1, 2) < i:
        S += 1
    r = i - 1 - m * comb(S, 2)
    T, U = divmod(r, S)
    return STU(S, T, U)


@dataclass
class DkDigraph:
    """Digraph on vertices 1..v with forward edges only."""

    v: int
    m: int
    out: dict[int, list[int]]
    violations: list = field(default_factory=list)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.v + 1) for j in self.out[i]]

    @property
    def edge_count(self) -> int:
        return sum(len(js) for js in self.out.values())

    def indegrees(self) -> list[int]:
        deg = [0] * (self.v + 1)
        for i, j in self.edges:
            deg[j] += 1
        return deg[1:]

    def outdegrees(self) -> list[int]:
        return [len(self.out[i]) for i in range(1, self.v + 1)]


def d0_digraph(v: int, m: int) -> DkDigraph:
    """Greedy digraph: each i sends edges to i+1 .. i+min(indeg+m, v-i)."""
    if v < 1 or m < 1:
        raise ValueError("need v >= 1 and m >= 1")
    indeg = [0] * (v + 2)
    out: dict[int, list[int]] = {}
    for i in range(1, v + 1):
        d = min(indeg[i] + m, v - i)
        out[i] = list(range(i + 1, i + d + 1))
        for j in out[i]:
            indeg[j] += 1
    return DkDigraph(v, m, out)


def indegree_formula(i: int, m: int) -> int:
    t = stu(i, m)
    return m * (t.S - 1) + t.T


def _bounds_vm(k: int, n: int) -> tuple[int, int]:
    _check_nk(k, n)
    v, m = n // 3, n - 2 * k - 1
    if not (3 * k > n) or m < 1:
        raise ValueError("need n/3 < k < (n-1)/2")
    return v, m


def E(k: int, n: int) -> int:
    """Closed-form edge count of the greedy digraph D0(n/3, n-2k-1)."""
    v, m = _bounds_vm(k, n)
    t = stu(v, m)
    S, T, U = t.S, t.T, t.U
    return (
        2 * m * m * comb(S, 3)
        + comb(m, 2) * comb(S, 2)
        + 2 * m * T * comb(S, 2)
        + comb(T, 2) * S
        + (U + 1) * (m * (S - 1) + T)
    )


def lemma_margin(k: int, n: int) -> Fraction:
    """E(k,n) + (B(k,n) - k n)/3; nonpositive by the degree argument."""
    return E(k, n) + (B(k, n) - k * n) / 3


def series_partial_sum(J: int) -> Fraction:
    """Exact sum of 1/(j^3 (j+1)^3) for j = 2..J."""
    return sum((Fraction(1, (j * (j + 1)) ** 3) for j in range(2, J + 1)), Fraction(0))


def series_limit() -> float:
    return 79 / 8 - math.pi ** 2


def lower_bound_constant() -> tuple[Fraction, int, float]:
    """(coefficient, offset, value) for coefficient * (offset - pi^2)."""
    coef = Fraction(2, 27)
    return coef, 15, float(coef) * (15 - math.pi ** 2)
