import random

import pytest

import oracles
from crossnum.bounds import B, E
from crossnum.catalog import load_pointset, partition_for
from crossnum.circular_sequence import (
    Halfperiod,
    Partition3,
    build_Dk,
    build_halfperiod,
    chi_leq_k,
    classify_transpositions,
    find_partition,
    verify_3_decomposable,
    wing_partition,
)
from crossnum.exact_geom import ParallelLinesError, Point, PointSet, expand_wing

HEXAGON = PointSet.from_coords([(0, 0), (5, 0), (7, 3), (4, 7), (0, 6), (-2, 2)])


def coords(P):
    return [(p.x.rat_part, p.y.rat_part) for p in P.points]


@pytest.fixture(scope="module")
def k24():
    P = load_pointset("K24")
    return P, build_halfperiod(P), partition_for("K24")


def test_hexagon():
    H = build_halfperiod(HEXAGON)
    H.check()
    assert chi_leq_k(H, 1) == 6
    assert chi_leq_k(H, 2) == 12 == oracles.leq_k_sets(coords(HEXAGON), 2)


def test_chi_matches_oracle_random():
    rng = random.Random(21)
    done = 0
    while done < 25:
        n = rng.randint(5, 11)
        pts = {(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(n)}
        try:
            P = PointSet.from_coords(sorted(pts)).checked(require_no_parallel=True)
        except ValueError:
            continue
        H = build_halfperiod(P)
        H.check()
        for k in range(1, (len(P) + 1) // 2):
            assert chi_leq_k(H, k) == oracles.leq_k_sets(coords(P), k)
        done += 1


def test_parallel_rejected():
    sq = PointSet.from_coords([(0, 0), (2, 0), (2, 1), (0, 1)])
    with pytest.raises(ParallelLinesError):
        build_halfperiod(sq)
    build_halfperiod(sq, allow_parallel=True).check()


def test_k_out_of_range():
    H = build_halfperiod(HEXAGON)
    with pytest.raises(ValueError):
        chi_leq_k(H, 3)
    with pytest.raises(ValueError):
        chi_leq_k(H, 0)


def test_k24_transpositions(k24):
    P, H, _ = k24
    assert len(H.transpositions) == 276
    H.check()


def test_full_period_and_shift(k24):
    _, H, _ = k24
    F = H.full_period()
    assert len(F.transpositions) == 2 * 276
    assert F.permutations[-1] == H.start
    for s in (0, 17, 276, 400):
        Hs = H.shifted(s)
        Hs.check()
        assert chi_leq_k(Hs, 5) == chi_leq_k(H, 5)


@pytest.mark.parametrize("name", ["K24", "K42", "K57"])
def test_catalog_decomposable(name):
    P = load_pointset(name)
    H = build_halfperiod(P)
    part = partition_for(name)
    res = verify_3_decomposable(H, part)
    assert res and set(res.witnesses) == {"A", "B", "C"}
    n = len(P)
    for k in range(1, (n + 1) // 2):
        bi, mono = classify_transpositions(H, part, k)
        assert bi + mono == chi_leq_k(H, k)
        assert bi == oracles.bichromatic_formula(k, n)
        if n // 3 <= k:
            assert chi_leq_k(H, k) >= B(k, n)


def test_shuffled_partition_not_decomposable(k24):
    _, H, part = k24
    labels = sorted(part.class_of)
    cls = [part.class_of[x] for x in labels]
    random.Random(3).shuffle(cls)
    assert not verify_3_decomposable(H, Partition3(dict(zip(labels, cls))))


def test_wing_partition_matches(k24):
    _, _, part = k24
    assert part.class_of == wing_partition(24).class_of


def test_partition_parse_roundtrip(k24):
    _, _, part = k24
    assert Partition3.parse(part.format()).class_of == part.class_of
    with pytest.raises(ValueError):
        Partition3({0: "A", 1: "A", 2: "B"})
    with pytest.raises(ValueError):
        Partition3({0: "A", 1: "B", 2: "D"})


def test_find_partition_small():
    P = PointSet.from_coords([(0, 0), (10, 0), (5, 9), (4, 3), (6, 3), (5, 5)])
    part = find_partition(P)
    assert part is not None and verify_3_decomposable(P, part)
    W = expand_wing([Point.of(10, 1), Point.of(3, 2)])
    blocks = {frozenset(find_partition(W).members(c)) for c in "ABC"}
    assert blocks == {frozenset(wing_partition(6).members(c)) for c in "ABC"}
    with pytest.raises(ValueError):
        find_partition(load_pointset("K24"))


@pytest.mark.parametrize("name", ["K24", "K42"])
def test_Dk_degree_inequality(name):
    P = load_pointset(name)
    H = build_halfperiod(P)
    part = partition_for(name)
    n = len(P)
    for k in range(n // 3 + 1, n // 2):  # keeps m = n - 2k - 1 >= 1
        for c in "ABC":
            D = build_Dk(H, part, k, c)
            assert D.violations == []
            assert D.edge_count <= E(k, n)


def test_Dk_requires_range(k24):
    _, H, part = k24
    with pytest.raises(ValueError):
        build_Dk(H, part, 8, "A")


def test_halfperiod_check_catches_corruption():
    H = build_halfperiod(HEXAGON)
    bad = Halfperiod(H.start, H.transpositions[:-1])
    with pytest.raises(AssertionError):
        bad.check()
