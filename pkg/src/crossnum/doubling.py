"""Doubling every point of an odd set, and what iterating that buys.

Replacing each point of an odd ``m``-set by a 2-point cluster on a halving
line gives ``16*cr(P) + (m/2)(2m^2 - 7m + 5)`` crossings, and the result has
a halving matching, so the even-case recursion can take over from there.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from .construction import ConstructionSpec, PreHalvingLine, get_model
from .crossing_count import count_crossings
from .exact_geom import IntCoords, PointSet, Scalar

__all__ = [
    "find_halving_line",
    "halving_lines",
    "double",
    "doubling_increment",
    "HalvingMatching",
    "halving_matching",
    "qstar_bound",
    "IterationStep",
    "IterationLedger",
    "iterate_ledger",
]


def _half(v) -> int:
    return 0 if v[1].sign() > 0 or (v[1].sign() == 0 and v[0].sign() > 0) else 1


def _cross(u, v) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def _angular(vs):
    def cmp(u, v):
        hu, hv = _half(u), _half(v)
        if hu != hv:
            return hu - hv
        return -_cross(u, v).sign()

    return sorted(vs, key=cmp_to_key(cmp))


def _gap_directions(P: PointSet, i: int):
    """Directions strictly inside each angular gap of the lines through p_i."""
    p = P[i]
    rays = []
    for j, q in enumerate(P.points):
        if j != i:
            v = (q.x - p.x, q.y - p.y)
            rays += [v, (-v[0], -v[1])]
    rays = _angular(rays)
    for a, b in zip(rays, rays[1:] + rays[:1]):
        yield (a[0] + b[0], a[1] + b[1])


def find_halving_line(P: PointSet, i: int, avoid=()) -> PreHalvingLine:
    """A simple line through ``p_i`` with (m-1)/2 points on each side.

    ``avoid`` lists directions already in use; a candidate parallel to one of
    them is skipped when another halving gap exists.
    """
    m = len(P)
    if m % 2 == 0:
        raise ValueError("halving lines through a point need an odd number of points")
    p = P[i]
    fallback = None
    for d in _gap_directions(P, i):
        left = sum(1 for j, q in enumerate(P.points)
                   if j != i and _cross(d, (q.x - p.x, q.y - p.y)).sign() > 0)
        if 2 * left != m - 1:
            continue
        if any(_cross(d, e) == 0 for e in avoid):
            fallback = fallback or d
            continue
        return PreHalvingLine(i, d, "simple")
    if fallback is None:
        raise AssertionError("no halving gap found; input not in general position")
    return PreHalvingLine(i, fallback, "simple")


def halving_lines(P: PointSet) -> dict[int, PreHalvingLine]:
    out: dict[int, PreHalvingLine] = {}
    for i in range(len(P)):
        out[i] = find_halving_line(P, i, [ln.direction for ln in out.values()])
    return out


def doubling_increment(m: int) -> Fraction:
    """(m/2)(2m^2 - 7m + 5): the non-inherited convex quadrilaterals."""
    return Fraction(m, 2) * (2 * m * m - 7 * m + 5)


def double(P: PointSet, base_crossings: int | None = None) -> tuple[ConstructionSpec, int]:
    """All-pairs spec over an odd set and its predicted crossing count."""
    P = P.checked()
    m = len(P)
    if m % 2 == 0:
        raise ValueError("doubling needs an odd number of points")
    if base_crossings is None:
        base_crossings = count_crossings(P, "fast").total
    pair = get_model("pair")
    spec = ConstructionSpec(P, [2] * m, {i: pair for i in range(m)}, halving_lines(P), f"double{m}")
    predicted = 16 * base_crossings + doubling_increment(m)
    assert predicted.denominator == 1
    return spec, int(predicted)


# ---------------------------------------------------------------------------
# halving matching


@dataclass
class HalvingMatching:
    """``line_of[label] = (a, b)``: the halving line through ``label`` spans a and b."""

    line_of: dict[int, tuple[int, int]]

    def lines(self) -> set[frozenset]:
        return {frozenset(ab) for ab in self.line_of.values()}

    def is_injective(self) -> bool:
        return len(self.lines()) == len(self.line_of)


def _is_halving(ic: IntCoords, a: int, b: int) -> bool:
    left = right = 0
    for x in range(ic.n):
        if x in (a, b):
            continue
        s = ic.orient(a, b, x)
        if s == 0:
            return False
        if s > 0:
            left += 1
        else:
            right += 1
    return left == right


def halving_matching(C: PointSet, pairs: list[tuple[int, int]]) -> HalvingMatching:
    """Certificate for a doubled set: one distinct halving line per point.

    ``pairs`` lists the two point indices of each cluster.  The cluster line
    goes to one point; the other gets the line found by turning the cluster
    line counterclockwise about the first point until it meets another point.
    """
    ic = C.ints()
    pts = C.points
    out: dict[int, tuple[int, int]] = {}
    for a, b in pairs:
        d = (pts[b].x - pts[a].x, pts[b].y - pts[a].y)
        if d[1].sign() < 0 or (d[1].sign() == 0 and d[0].sign() < 0):
            a, b = b, a
            d = (-d[0], -d[1])
        # a = p', b = p'': a comes first along d
        best = None
        for q in range(len(pts)):
            if q in (a, b):
                continue
            w = (pts[q].x - pts[a].x, pts[q].y - pts[a].y)
            if _cross(d, w).sign() < 0:
                w = (-w[0], -w[1])
            # w is the inherited direction of the turned line through q
            if best is None or _cross(best[1], w).sign() < 0:
                best = (q, w)
        q, w = best
        before = ((pts[q].x - pts[a].x) * w[0] + (pts[q].y - pts[a].y) * w[1]).sign() < 0
        if before:
            out[a] = (a, q)
            out[b] = (a, b)
        else:
            out[b] = (b, q)
            out[a] = (a, b)
    for lab, (u, v) in out.items():
        if not _is_halving(ic, u, v):
            raise AssertionError(f"line through {u} and {v} is not halving")
    res = HalvingMatching(out)
    if not res.is_injective():
        raise AssertionError("halving line assignment is not injective")
    return res


# ---------------------------------------------------------------------------
# asymptotics


def qstar_bound(m: int, cr: int) -> Fraction:
    """(24 cr + 3m^3 - 7m^2 + 30m/7) / m^4 as an exact fraction."""
    if m < 3:
        raise ValueError("need m >= 3")
    return (24 * Fraction(cr) + 3 * m ** 3 - 7 * m ** 2 + Fraction(30, 7) * m) / Fraction(m) ** 4


@dataclass(frozen=True)
class IterationStep:
    k: int
    n: int
    predicted: int
    closed_form: Fraction


@dataclass
class IterationLedger:
    """Predicted counts of the iterated doublings of one base set.

    The values belong to this construction, they are upper bounds on
    cr(K_n), not the crossing numbers themselves.
    """

    m: int
    base_crossings: int
    steps: list[IterationStep] = field(default_factory=list)

    @property
    def coefficient(self) -> Fraction:
        """Leading n^4 coefficient; 24 times it is the q* bound."""
        return qstar_bound(self.m, self.base_crossings) / 24

    def consistent(self) -> bool:
        return all(s.closed_form == s.predicted for s in self.steps)


def _closed_form(m: int, cr: int, k: int) -> Fraction:
    n = Fraction(2 ** k * m)
    lead = (24 * Fraction(cr) + 3 * m ** 3 - 7 * m ** 2 + Fraction(30, 7) * m) / (24 * Fraction(m) ** 4)
    return lead * n ** 4 - n ** 3 / 8 + Fraction(7, 24) * n ** 2 - Fraction(5, 28) * n


def iterate_ledger(m: int, cr: int, steps: int) -> IterationLedger:
    """Step-by-step recursion next = 16 cur + (size/2)(2 size^2 - 7 size + 5)."""
    if m % 2 == 0:
        raise ValueError("the ledger starts from an odd base set")
    led = IterationLedger(m, cr)
    size, cur = m, Fraction(cr)
    for k in range(1, steps + 1):
        cur = 16 * cur + doubling_increment(size)
        size *= 2
        assert cur.denominator == 1
        led.steps.append(IterationStep(k, size, int(cur), _closed_form(m, cr, k)))
    return led
