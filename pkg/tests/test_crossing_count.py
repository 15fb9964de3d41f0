import random
from fractions import Fraction
from math import comb

import pytest

import oracles
from crossnum.catalog import load_pointset
from crossnum.crossing_count import (
    count_crossings,
    count_crossings_brute,
    count_crossings_fast,
    triangles_containing,
)
from crossnum.exact_geom import Point, PointSet, Scalar, rotate120


def random_set(rng, n, box=40):
    while True:
        coords = {(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(n)}
        if len(coords) == n:
            try:
                return PointSet.from_coords(sorted(coords))
            except ValueError:
                pass


PENTAGON = PointSet.from_coords([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)])


def test_four_convex():
    assert count_crossings_brute(PointSet.from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])).total == 1


def test_four_nonconvex():
    assert count_crossings_brute(PointSet.from_coords([(0, 0), (3, 0), (0, 3), (1, 1)])).total == 0


def test_pentagon():
    assert count_crossings_brute(PENTAGON).total == 5
    assert count_crossings_fast(PENTAGON).total == 5


def test_small_sets():
    assert count_crossings_fast(PointSet.from_coords([(0, 0), (1, 0), (0, 1)])).total == 0


@pytest.mark.parametrize("name,want", [("K24", 3699), ("K42", 40593), ("K57", 145176)])
def test_catalog_counts(name, want):
    P = load_pointset(name)
    assert count_crossings(P, "brute").total == want
    assert count_crossings(P, "fast").total == want


def test_fast_equals_brute_random():
    rng = random.Random(11)
    for _ in range(100):
        P = random_set(rng, rng.randint(5, 15))
        b = count_crossings_brute(P).total
        assert count_crossings_fast(P).total == b
        assert b <= comb(len(P), 4)


def test_brute_matches_hull_oracle():
    rng = random.Random(12)
    for _ in range(30):
        P = random_set(rng, rng.randint(5, 10))
        coords = [(p.x.rat_part, p.y.rat_part) for p in P.points]
        assert count_crossings_brute(P).total == oracles.convex_quads(coords)


def test_triangles_identity():
    P = random_set(random.Random(2), 12)
    n = len(P)
    total = comb(n, 4) - sum(triangles_containing(P, i) for i in range(n))
    assert total == count_crossings_brute(P).total


def test_invariance():
    rng = random.Random(4)
    P = random_set(rng, 11)
    c = count_crossings_fast(P).total
    rot = PointSet(tuple(rotate120(p) for p in P.points))
    assert count_crossings_fast(rot).total == c
    shift = P.transformed(lambda p: Point(p.x + Fraction(7, 3), p.y - 5, p.label))
    assert count_crossings_fast(shift).total == c
    scale = P.transformed(lambda p: Point(p.x * Fraction(3, 7), p.y * Fraction(3, 7), p.label))
    assert count_crossings_fast(scale).total == c


def test_monotone_under_addition():
    rng = random.Random(8)
    for _ in range(20):
        Q = random_set(rng, 10)
        P = PointSet(Q.points[:9])
        assert count_crossings_fast(Q).total >= count_crossings_fast(P).total


def test_sqrt3_coordinates():
    s3 = Scalar.sqrt3()
    P = PointSet.from_coords([(0, 0), (1, 0), (Fraction(1, 2), s3 / 2), (Fraction(1, 2), s3 / 6)])
    assert count_crossings_brute(P).total == 0


def test_unknown_method():
    with pytest.raises(ValueError):
        count_crossings(PENTAGON, "magic")
