"""Halfperiods of circular sequences and the (<=k)-set statistics read off them.

Positions are 1-indexed: a transposition at position ``i`` swaps the entries
at positions ``i`` and ``i+1``.  It is *i-critical* for ``min(i, n-i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from itertools import combinations
from math import comb
from typing import Mapping

from .bounds import DkDigraph
from .exact_geom import ParallelLinesError, PointSet, cross_zsqrt3, sign_zsqrt3

__all__ = [
    "Halfperiod",
    "Partition3",
    "build_halfperiod",
    "chi_leq_k",
    "classify_transpositions",
    "verify_3_decomposable",
    "DecompositionResult",
    "build_Dk",
    "find_partition",
    "wing_partition",
]

CLASSES = ("A", "B", "C")


@dataclass(frozen=True)
class Halfperiod:
    """``start`` followed by adjacent transpositions ``(position, left, right)``."""

    start: tuple[int, ...]
    transpositions: tuple[tuple[int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.start)

    @cached_property
    def permutations(self) -> list[tuple[int, ...]]:
        perm = list(self.start)
        out = [tuple(perm)]
        for pos, a, b in self.transpositions:
            perm[pos - 1], perm[pos] = perm[pos], perm[pos - 1]
            out.append(tuple(perm))
        return out

    def full_period(self) -> "Halfperiod":
        """The full turn: the halfperiod followed by its mirror image."""
        n = self.n
        mirrored = tuple((n - pos, b, a) for pos, a, b in self.transpositions)
        return Halfperiod(self.start, self.transpositions + mirrored)

    def shifted(self, s: int) -> "Halfperiod":
        """The halfperiod beginning at permutation ``s`` of the full turn."""
        N = len(self.transpositions)
        if not 0 <= s <= 2 * N:
            raise IndexError("shift out of range")
        full = self.full_period()
        trs = full.transpositions + full.transpositions
        start = full.permutations[s % (2 * N)] if N else self.start
        return Halfperiod(tuple(start), trs[s % (2 * N) : s % (2 * N) + N] if N else ())

    def check(self) -> None:
        """Assert the structural invariants of a halfperiod."""
        n = self.n
        perms = self.permutations
        assert len(perms) == comb(n, 2) + 1
        assert perms[-1] == tuple(reversed(perms[0]))
        seen = set()
        for (pos, a, b), before in zip(self.transpositions, perms):
            assert before[pos - 1] == a and before[pos] == b
            key = frozenset((a, b))
            assert key not in seen
            seen.add(key)


def _event_key_cmp(u, v) -> int:
    c = cross_zsqrt3(u[0], v[0])
    return -c if c else 0


def build_halfperiod(P: PointSet, allow_parallel: bool = False) -> Halfperiod:
    """Rotate a projection direction through half a turn, recording swaps.

    With ``allow_parallel`` the swaps of parallel (hence disjoint) pairs are
    ordered by index; they commute, so the result is still a valid halfperiod.
    """
    ic = P.ints()
    n = ic.n
    labels = [p.label for p in P.points]
    events = []
    for i, j in combinations(range(n), 2):
        dxa, dxb, dya, dyb = ic.vec(i, j)
        # normal to p_j - p_i, taken in the half-plane of angles [0, pi)
        nrm = (-dya, -dyb, dxa, dxb)
        sy = sign_zsqrt3(nrm[2], nrm[3])
        if sy < 0 or (sy == 0 and sign_zsqrt3(nrm[0], nrm[1]) < 0):
            nrm = tuple(-c for c in nrm)
        events.append((nrm, i, j))
    events.sort(key=cmp_to_key(_event_key_cmp))
    for e1, e2 in zip(events, events[1:]):
        if cross_zsqrt3(e1[0], e2[0]) == 0 and not allow_parallel:
            raise ParallelLinesError((labels[e1[1]], labels[e1[2]]), (labels[e2[1]], labels[e2[2]]))
    if n < 2:
        return Halfperiod(tuple(labels), ())
    # start strictly between the last event direction and angle pi
    nxa, nxb, nya, nyb = events[-1][0]
    big_a = abs(nxa) + 3 * abs(nxb) + abs(nya) + 3 * abs(nyb) + 1
    u0 = (nxa - big_a, nxb, nya, nyb)

    def proj(i):
        # dot(p_i, u0) in Z[sqrt3]
        xa, xb, ya, yb = ic.xa[i], ic.xb[i], ic.ya[i], ic.yb[i]
        ua, ub, va, vb = u0
        return (xa * ua + 3 * xb * ub + ya * va + 3 * yb * vb, xa * ub + xb * ua + ya * vb + yb * va)

    projs = [proj(i) for i in range(n)]

    def cmp_proj(i, j):
        a = projs[i][0] - projs[j][0]
        b = projs[i][1] - projs[j][1]
        s = sign_zsqrt3(a, b)
        if s == 0:
            raise ParallelLinesError((labels[i], labels[j]), (labels[i], labels[j]))
        return s

    order = sorted(range(n), key=cmp_to_key(cmp_proj))
    where = [0] * n
    for pos, idx in enumerate(order):
        where[idx] = pos
    start = tuple(labels[i] for i in order)
    trs = []
    for _, i, j in events:
        pi, pj = where[i], where[j]
        if abs(pi - pj) != 1:
            raise AssertionError("swap of non-adjacent elements; input not in general position")
        lo = min(pi, pj)
        left, right = order[lo], order[lo + 1]
        trs.append((lo + 1, labels[left], labels[right]))
        order[lo], order[lo + 1] = right, left
        where[left], where[right] = lo + 1, lo
    return Halfperiod(start, tuple(trs))


def _check_k(n: int, k: int) -> None:
    if not 1 <= k or not 2 * k < n:
        raise ValueError(f"k={k} outside 1 <= k < n/2 for n={n}")


def chi_leq_k(H: Halfperiod, k: int) -> int:
    """Number of (<=k)-sets: transpositions at positions <= k or >= n-k."""
    n = H.n
    _check_k(n, k)
    return sum(1 for pos, _, _ in H.transpositions if pos <= k or pos >= n - k)


@dataclass(frozen=True)
class Partition3:
    class_of: Mapping[int, str]

    def __post_init__(self):
        sizes = {c: 0 for c in CLASSES}
        for lab, c in self.class_of.items():
            if c not in sizes:
                raise ValueError(f"unknown class {c!r} for label {lab}")
            sizes[c] += 1
        if len(set(sizes.values())) != 1:
            raise ValueError(f"unbalanced partition {sizes}")

    @property
    def v(self) -> int:
        return len(self.class_of) // 3

    def members(self, cls: str) -> list[int]:
        return [lab for lab, c in self.class_of.items() if c == cls]

    @staticmethod
    def parse(text: str) -> "Partition3":
        mapping = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            lab, cls = line.split()
            mapping[int(lab)] = cls.upper()
        return Partition3(mapping)

    def format(self) -> str:
        return "".join(f"{lab} {c}\n" for lab, c in sorted(self.class_of.items()))


def wing_partition(n: int) -> Partition3:
    """Classes by wing for sets produced by ``expand_wing`` (labels 0..n-1)."""
    if n % 3:
        raise ValueError("n must be a multiple of 3")
    w = n // 3
    return Partition3({i: CLASSES[i // w] for i in range(n)})


def _check_partition(H: Halfperiod, part: Partition3) -> None:
    if set(part.class_of) != set(H.start):
        raise ValueError("partition labels do not match the point labels")


def classify_transpositions(H: Halfperiod, part: Partition3, k: int) -> tuple[int, int]:
    """(bichromatic, monochromatic) split of the (<=k)-critical transpositions."""
    n = H.n
    _check_k(n, k)
    _check_partition(H, part)
    cl = part.class_of
    bi = mono = 0
    for pos, a, b in H.transpositions:
        if pos <= k or pos >= n - k:
            if cl[a] == cl[b]:
                mono += 1
            else:
                bi += 1
    return bi, mono


@dataclass
class DecompositionResult:
    decomposable: bool
    witnesses: dict[str, int]  # middle class -> permutation index in the halfperiod
    halfperiod: Halfperiod

    def __bool__(self):
        return self.decomposable


def _block_pattern(perm, cl, v) -> tuple[str, str, str] | None:
    cls = [cl[x] for x in perm]
    first, mid, last = cls[0], cls[v], cls[2 * v]
    if len({first, mid, last}) != 3:
        return None
    if cls[:v].count(first) != v or cls[v : 2 * v].count(mid) != v:
        return None
    return (first, mid, last)


def verify_3_decomposable(P: PointSet | Halfperiod, part: Partition3) -> DecompositionResult:
    """Look for projections showing each class as the middle block."""
    H = P if isinstance(P, Halfperiod) else build_halfperiod(P, allow_parallel=True)
    _check_partition(H, part)
    v = H.n // 3
    cl = part.class_of
    witnesses: dict[str, int] = {}
    for idx, perm in enumerate(H.permutations):
        pat = _block_pattern(perm, cl, v)
        if pat is not None and pat[1] not in witnesses:
            witnesses[pat[1]] = idx
            if len(witnesses) == 3:
                break
    return DecompositionResult(len(witnesses) == 3, witnesses, H)


def _start_with_class_first(H: Halfperiod, part: Partition3, cls: str) -> Halfperiod:
    v = H.n // 3
    cl = part.class_of
    N = len(H.transpositions)
    for idx, perm in enumerate(H.permutations):
        pat = _block_pattern(perm, cl, v)
        if pat is None:
            continue
        if pat[0] == cls:
            return H.shifted(idx)
        if pat[2] == cls:
            return H.shifted(idx + N)
    raise ValueError(f"no projection shows class {cls} as an outer block")


def build_Dk(H: Halfperiod, part: Partition3, k: int, cls: str) -> DkDigraph:
    """Digraph of class-internal swaps strictly between positions k and n-k.

    Vertices are numbered by position in a projection where the class forms
    the leading block.  Degree-inequality failures land in ``violations``.
    """
    n = H.n
    _check_partition(H, part)
    v = n // 3
    if not (3 * k > n and 2 * k < n):
        raise ValueError("need n/3 < k < n/2")
    H0 = _start_with_class_first(H, part, cls)
    index = {lab: i + 1 for i, lab in enumerate(H0.start[:v])}
    cl = part.class_of
    out: dict[int, list[int]] = {i: [] for i in range(1, v + 1)}
    for pos, a, b in H0.transpositions:
        if cl[a] == cls and cl[b] == cls and k < pos < n - k:
            i, j = sorted((index[a], index[b]))
            out[i].append(j)
    for js in out.values():
        js.sort()
    m = n - 2 * k - 1
    D = DkDigraph(v, m, out)
    indeg = D.indegrees()
    for i in range(1, v + 1):
        plus = len(out[i])
        if plus > min(m + indeg[i - 1], v - i):
            D.violations.append((i, plus, indeg[i - 1]))
    return D


def find_partition(P: PointSet) -> Partition3 | None:
    """Exhaustive search for a 3-decomposing partition (n <= 12 only)."""
    n = len(P)
    if n % 3 or n > 12:
        raise ValueError("partition search supports n in {3, 6, 9, 12}")
    H = build_halfperiod(P, allow_parallel=True)
    labels = list(H.start)
    v = n // 3
    first = labels[0]
    rest = labels[1:]
    for a_rest in combinations(rest, v - 1):
        A = {first, *a_rest}
        remaining = [x for x in rest if x not in A]
        anchor = remaining[0]
        for b_rest in combinations(remaining[1:], v - 1):
            Bset = {anchor, *b_rest}
            mapping = {x: ("A" if x in A else "B" if x in Bset else "C") for x in labels}
            part = Partition3(mapping)
            if verify_3_decomposable(H, part):
                return part
    return None
