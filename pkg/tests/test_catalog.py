import pytest

import oracles
from crossnum.catalog import (
    RECIPES,
    WINGS,
    load,
    load_pointset,
    names,
    partition_for,
    recipe_partition,
    table_rows,
    verify_entry,
)
from crossnum.catalog.data import EXPECTED, NOT_REPRODUCIBLE
from crossnum.crossing_count import count_crossings

# optimal rectilinear values for these n, recomputed below by two methods
PREFIX_COUNTS = {1: 0, 2: 3, 3: 36, 4: 153, 5: 447, 6: 1029, 7: 2055, 8: 3699}


@pytest.mark.parametrize("i,want", sorted(PREFIX_COUNTS.items()))
def test_wing_prefixes(i, want):
    P = load_pointset(f"W{i}")
    assert len(P) == 3 * i
    assert count_crossings(P, "brute").total == want
    if i <= 5:
        assert oracles.convex_quads([(p.x, p.y) for p in P.points]) == want


def test_names_cover_everything():
    got = names()
    for nm in list(WINGS) + list(RECIPES) + ["base30", "base51", "W1", "W8"]:
        assert nm in got


@pytest.mark.parametrize("name", list(WINGS) + ["base30"])
def test_pointsets_verify(name):
    res = verify_entry(name, "fast")
    assert res.ok, res.problems
    assert res.computed == EXPECTED[name]


def test_base51_differs_from_k51():
    res = verify_entry("base51", "fast")
    assert res.expected is None
    assert res.computed != EXPECTED["K51"]
    assert "K51" in load("base51").notes


@pytest.mark.parametrize("name", ["K33", "K66", "K96"])
def test_recipe_verify(name):
    res = verify_entry(name)
    assert res.ok and res.computed == EXPECTED[name]


def test_unknown_names():
    for bad in ("K25", "W9", "W0", "nothing"):
        with pytest.raises(KeyError):
            load(bad)
    with pytest.raises(KeyError):
        partition_for("K33")


def test_recipe_partition_balanced():
    part = recipe_partition("K33")
    assert len(part.class_of) == 33 and part.v == 11


def test_table_rows_subset():
    rows = table_rows(only=[24, 33, 315])
    assert [r.n for r in rows] == [24, 33, 315]
    assert all(r.status == "OK" and r.computed == r.expected for r in rows)
    assert rows[-1].computed == 152210640


def test_not_reproducible_rows():
    if not NOT_REPRODUCIBLE:
        pytest.skip("every row is reproducible")
    n = sorted(NOT_REPRODUCIBLE)[0]
    (row,) = table_rows(only=[n])
    assert row.status == "not-reproducible" and row.computed is None
