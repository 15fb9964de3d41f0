import random
from fractions import Fraction

import pytest

import oracles
from crossnum.catalog import load_pointset
from crossnum.construction import count_formula, synthesize_detailed, validate_spec
from crossnum.crossing_count import count_crossings
from crossnum.doubling import (
    double,
    doubling_increment,
    find_halving_line,
    halving_lines,
    halving_matching,
    iterate_ledger,
    qstar_bound,
)
from crossnum.exact_geom import PointSet
from crossnum.randspec import random_pointset

TRIANGLE = PointSet.from_coords([(0, 0), (7, 1), (2, 6)])
PENTAGON = PointSet.from_coords([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)])


def coords(P):
    return [(p.x.rat_part, p.y.rat_part) for p in P.points]


def oracle_halving(pts, a, b):
    left = sum(1 for c in pts if c not in (pts[a], pts[b]) and oracles._cross(pts[a], pts[b], c) > 0)
    right = sum(1 for c in pts if c not in (pts[a], pts[b]) and oracles._cross(pts[a], pts[b], c) < 0)
    return left == right


def check_doubling(P):
    spec, predicted = double(P)
    assert validate_spec(spec) == []
    assert count_formula(spec).total == predicted
    S = synthesize_detailed(spec)
    assert count_crossings(S.points, "fast").total == predicted
    pairs = [tuple(v) for v in S.clusters().values()]
    cert = halving_matching(S.points, pairs)
    assert cert.is_injective() and len(cert.line_of) == 2 * len(P)
    pts = coords(S.points)
    for lab, (a, b) in cert.line_of.items():
        assert lab in (a, b)
        assert oracle_halving(pts, a, b)
    return S, predicted


def test_increment():
    assert doubling_increment(3) == 3
    assert doubling_increment(5) == 50
    assert doubling_increment(1) == 0


def test_triangle():
    S, predicted = check_doubling(TRIANGLE)
    assert predicted == 3
    assert oracles.convex_quads(coords(S.points)) == 3


def test_pentagon():
    S, predicted = check_doubling(PENTAGON)
    assert predicted == 130
    assert oracles.convex_quads(coords(S.points)) == 130


@pytest.mark.parametrize("m", [3, 5, 7, 9, 11])
def test_random_odd_sets(m):
    rng = random.Random(100 + m)
    for _ in range(2):
        check_doubling(random_pointset(rng, m))


def test_even_rejected():
    with pytest.raises(ValueError):
        double(PointSet.from_coords([(0, 0), (1, 0), (0, 1), (3, 2)]))


def test_halving_lines_balanced():
    P = random_pointset(random.Random(4), 9)
    pts = coords(P)
    lines = halving_lines(P)
    assert double(P)[0].lines == lines
    for i, line in lines.items():
        assert line.kind == "simple"
        dx, dy = (c.rat_part for c in line.direction)
        tip = (pts[i][0] + dx, pts[i][1] + dy)
        sides = [oracles._cross(pts[i], tip, q) for j, q in enumerate(pts) if j != i]
        assert 0 not in sides and sum(1 for v in sides if v > 0) == 4
    # with a single halving gap the avoided direction is still returned
    again = find_halving_line(P, 0, avoid=[lines[0].direction])
    assert again.kind == "simple"


def test_bad_certificate_rejected():
    S, _ = check_doubling(PENTAGON)
    # pairing points from different clusters breaks the construction
    pairs = [tuple(v) for v in S.clusters().values()]
    shuffled = [(pairs[i][0], pairs[(i + 1) % len(pairs)][1]) for i in range(len(pairs))]
    with pytest.raises(AssertionError):
        halving_matching(S.points, shuffled)


class TestQstar:
    def test_small(self):
        assert qstar_bound(3, 0) == Fraction(8, 21) == oracles.qstar(3, 0)

    def test_k315(self):
        q = qstar_bound(315, 152210640)
        assert q == oracles.qstar(315, 152210640)
        assert q == Fraction(83247328, 218791125)
        assert f"{float(q):.6f}" == "0.380488" and q < Fraction(380488, 10 ** 6)

    def test_rejects_small_m(self):
        with pytest.raises(ValueError):
            qstar_bound(2, 0)


class TestLedger:
    @pytest.mark.parametrize("m,cr", [(3, 0), (5, 5), (315, 152210640), (51, 91452)])
    def test_recursion_matches_closed_form(self, m, cr):
        led = iterate_ledger(m, cr, 6)
        assert led.consistent()
        assert [s.n for s in led.steps] == [m * 2 ** k for k in range(1, 7)]

    def test_first_step_matches_double(self):
        led = iterate_ledger(5, 5, 1)
        assert led.steps[0].predicted == double(PENTAGON)[1]

    def test_coefficient_limit(self):
        led = iterate_ledger(315, 152210640, 12)
        last = led.steps[-1]
        ratio = Fraction(last.predicted) / Fraction(last.n) ** 4
        assert abs(ratio - led.coefficient) < Fraction(1, 10 ** 4)

    def test_even_rejected(self):
        with pytest.raises(ValueError):
            iterate_ledger(4, 0, 1)


@pytest.mark.slow
def test_k51_doubling():
    P = load_pointset("K51")
    spec, predicted = double(P)
    assert count_crossings(P, "fast").total == 91452
    assert predicted == 1586907
    S = synthesize_detailed(spec)
    assert count_crossings(S.points, "fast").total == predicted
