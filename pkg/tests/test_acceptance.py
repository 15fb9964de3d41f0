"""Acceptance suite: one PASS/FAIL line per criterion.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""
import math
import os
import random
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
from crossnum.bounds import (  # noqa: E402
    B,
    E,
    d0_digraph,
    indegree_formula,
    lemma_margin,
    lower_bound_constant,
    series_partial_sum,
)
from crossnum.catalog import (  # noqa: E402
    RECIPES,
    _load_recipe,
    load_pointset,
    partition_for,
    recipe_partition,
)
from crossnum.catalog.data import EXPECTED  # noqa: E402
from crossnum.circular_sequence import (  # noqa: E402
    build_Dk,
    build_halfperiod,
    chi_leq_k,
    classify_transpositions,
    verify_3_decomposable,
)
from crossnum.construction import count_formula, synthesize, synthesize_detailed  # noqa: E402
from crossnum.crossing_count import count_crossings  # noqa: E402
from crossnum.doubling import double, halving_matching, qstar_bound  # noqa: E402
from crossnum.randspec import random_pointset, random_spec  # noqa: E402

# time limits in seconds
LIMIT_K24 = 1.0
LIMIT_FULLSET = 10.0
LIMIT_RECIPES = 60.0

FULLSETS = ("K42", "K48", "K51", "K54", "K57")
RANDOM_SPECS = 50
DOUBLING_MS = (3, 5, 7, 9, 11)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(no, ok, detail):
    RESULTS[no] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {no}: {detail}")
    return ok


def timed_count(name, method):
    """Load (uncached, exact parse and rotation) plus count."""
    t0 = time.perf_counter()
    P = load_pointset.__wrapped__(name)
    total = count_crossings(P, method).total
    return total, time.perf_counter() - t0


# decomposable sets shared by criteria 7 and 9: wings, base sets, synthesized recipes
_sets_cache = {}


def decomposable_sets():
    if not _sets_cache:
        for name in ("K24", "K42", "K48", "K51", "K54", "K57", "base30", "base51"):
            P = load_pointset(name)
            _sets_cache[name] = (build_halfperiod(P, allow_parallel=True), partition_for(name))
        for name in RECIPES:
            if name == "K315":
                continue
            P = synthesize(_load_recipe(name))
            _sets_cache[name] = (build_halfperiod(P, allow_parallel=True), recipe_partition(name))
    return _sets_cache


def criterion_1():
    got, dt = timed_count("K24", "brute")
    return record(1, got == 3699 and dt < LIMIT_K24, f"K24 = {got} (want 3699) in {dt:.3f}s (limit {LIMIT_K24}s)")


def criterion_2():
    parts, ok = [], True
    for name in FULLSETS:
        got, dt = timed_count(name, "brute")
        ok &= got == EXPECTED[name] and dt < LIMIT_FULLSET
        parts.append(f"{name}={got} ({dt:.2f}s)")
    return record(2, ok, ", ".join(parts) + f"; limit {LIMIT_FULLSET}s each")


def criterion_3():
    got, _ = timed_count("base30", "brute")
    return record(3, got == 9726, f"base30 = {got} (want 9726)")


def criterion_4():
    t0 = time.perf_counter()
    bad = []
    for name in RECIPES:
        got = count_formula(_load_recipe(name)).total
        if got != EXPECTED[name]:
            bad.append(f"{name}={got}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < LIMIT_RECIPES
    detail = f"{len(RECIPES) - len(bad)}/{len(RECIPES)} recipes match in {dt:.2f}s (limit {LIMIT_RECIPES}s)"
    return record(4, ok, detail + (f"; mismatches {bad}" if bad else ""))


def criterion_5():
    q = qstar_bound(315, 152210640)
    want = Fraction(83247328, 218791125)
    ok = q == want and q == oracles.qstar(315, 152210640) and q < Fraction(380488, 10 ** 6)
    return record(5, ok, f"q* bound = {q} = {float(q):.9f} (< 0.380488)")


def criterion_6():
    rng = random.Random(20240601)
    mismatches = splitting = 0
    for _ in range(RANDOM_SPECS):
        spec = random_spec(rng, max_n=30, max_size=4)
        splitting += sum(1 for ln in spec.lines.values() if ln.kind == "splitting")
        if count_crossings(synthesize(spec), "brute").total != count_formula(spec).total:
            mismatches += 1
    doubled = 0
    for m in range(3, 12, 2):
        spec, predicted = double(random_pointset(rng, m))
        if count_crossings(synthesize(spec), "brute").total != predicted:
            mismatches += 1
        doubled += 1
    ok = mismatches == 0 and splitting > 0
    return record(6, ok, f"{RANDOM_SPECS} random specs ({splitting} splitting lines) "
                         f"and {doubled} doubled odd sets: {mismatches} mismatches")


def criterion_7():
    failures, checked = [], 0
    for name, (H, part) in decomposable_sets().items():
        n = H.n
        if not verify_3_decomposable(H, part):
            failures.append(f"{name} not decomposable")
            continue
        for k in range(1, (n + 1) // 2):
            chi = chi_leq_k(H, k)
            bi, _ = classify_transpositions(H, part, k)
            checked += 1
            if chi < B(k, n):
                failures.append(f"{name} k={k}: chi {chi} < B {B(k, n)}")
            if bi != oracles.bichromatic_formula(k, n):
                failures.append(f"{name} k={k}: bichromatic {bi}")
    return record(7, not failures, f"{len(decomposable_sets())} sets, {checked} (set, k) pairs"
                  + (f"; failures {failures[:3]}" if failures else ""))


def criterion_8():
    failures, pairs = [], 0
    for n in range(6, 301, 3):
        v = n // 3
        for k in range(v + 1, (n + 1) // 2):
            m = n - 2 * k - 1
            if m < 1:
                continue  # m = 0 boundary is outside the digraph's domain
            pairs += 1
            D = d0_digraph(v, m)
            indeg = D.indegrees()
            if E(k, n) != D.edge_count or D.edge_count != oracles.d0_edges(v, m)[0]:
                failures.append(f"E({k},{n})")
            if indeg != [indegree_formula(i, m) for i in range(1, v + 1)]:
                failures.append(f"indegrees({v},{m})")
            if lemma_margin(k, n) > 0:
                failures.append(f"margin({k},{n})")
    gap = abs(float(series_partial_sum(10_000)) - (79 / 8 - math.pi ** 2))
    _, _, const = lower_bound_constant()
    shown = f"{const:.6f}"
    ok = not failures and gap < 1e-9 and shown == "0.380029" and const > 0.380029
    return record(8, ok, f"{pairs} (k, n) pairs, series gap {gap:.2e}, constant {const:.9f}"
                  + (f"; failures {failures[:3]}" if failures else ""))


def criterion_9():
    violations, built = [], 0
    for name, (H, part) in decomposable_sets().items():
        n = H.n
        for k in range(n // 3 + 1, n // 2):  # keeps m = n - 2k - 1 >= 1
            for cls in "ABC":
                D = build_Dk(H, part, k, cls)
                built += 1
                if D.violations:
                    violations.append(f"{name} k={k} {cls}")
    return record(9, not violations, f"{built} digraphs, {len(violations)} with degree violations"
                  + (f": {violations[:3]}" if violations else ""))


def criterion_10():
    rng = random.Random(777)
    parts, ok = [], True
    for m in DOUBLING_MS:
        P = random_pointset(rng, m)
        spec, predicted = double(P)
        base = count_crossings(P, "brute").total
        want = 16 * base + Fraction(m, 2) * (2 * m * m - 7 * m + 5)
        S = synthesize_detailed(spec)
        got = count_crossings(S.points, "brute").total
        cert = halving_matching(S.points, [tuple(v) for v in S.clusters().values()])
        good = got == predicted == want and cert.is_injective() and len(cert.line_of) == 2 * m
        ok &= good
        parts.append(f"m={m}: {got}")
    return record(10, ok, ", ".join(parts) + " with halving matchings")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.acceptance
@pytest.mark.parametrize("crit", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(crit):
    assert crit()


if __name__ == "__main__":
    passed = sum(bool(c()) for c in CRITERIA)
    print(f"{passed}/{len(CRITERIA)} criteria passed")
    sys.exit(0 if passed == len(CRITERIA) else 1)
