"""Named point sets and construction recipes with their stated crossing counts."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Optional

from ..circular_sequence import Partition3, wing_partition
from ..exact_geom import Point, PointSet, parse_pointset, parse_scalar, rotate120
from . import data

__all__ = [
    "CatalogEntry",
    "names",
    "load",
    "load_pointset",
    "partition_for",
    "verify_entry",
    "verify_all",
    "TableRow",
    "table_rows",
]

WINGS = {
    "K24": data.K24_WING,
    "K42": data.K42_WING,
    "K48": data.K48_WING,
    "K51": data.K51_WING,
    "K54": data.K54_WING,
    "K57": data.K57_WING,
}
BASES = {
    "base30": (data.BASE30_EXPLICIT, data.BASE30_ROTATED, 30),
    "base51": (data.BASE51_EXPLICIT, data.BASE51_ROTATED, 51),
}
RECIPES = ("K33", "K60", "K63", "K66", "K69", "K72", "K75", "K78", "K81", "K84",
           "K87", "K90", "K93", "K96", "K99", "K315")


@dataclass
class CatalogEntry:
    name: str
    kind: str  # wing | fullset | recipe
    payload: object
    expected_crossings: Optional[int] = None
    notes: str = ""

    @property
    def n(self) -> int:
        if self.kind == "recipe":
            return self.payload.n
        return len(self.payload)


def names() -> list[str]:
    prefixes = [f"W{i}" for i in range(1, 9)]
    return list(WINGS) + list(BASES) + list(RECIPES) + prefixes


def _wing_points(text: str) -> list[Point]:
    ps = parse_pointset(text, check=False)
    return list(ps.points)


def _base_set(name: str) -> PointSet:
    explicit, rotated, m = BASES[name]
    pts: dict[int, Point] = {}
    for i, (x, y) in explicit.items():
        pts[i] = Point(parse_scalar(x), parse_scalar(y), i - 1)
    for i, (power, j) in rotated.items():
        p = pts[j]
        for _ in range(power):
            p = rotate120(p)
        pts[i] = p.relabel(i - 1)
    return PointSet(tuple(pts[i] for i in range(1, m + 1))).checked()


@lru_cache(maxsize=None)
def load_pointset(name: str) -> PointSet:
    """Point set of a wing, full set, base set or wing prefix ``W1``..``W8``."""
    from ..exact_geom import expand_wing

    if name in WINGS:
        return parse_pointset("wing\n" + WINGS[name])
    if name in BASES:
        return _base_set(name)
    if name.startswith("W") and name[1:].isdigit():
        i = int(name[1:])
        wing = _wing_points(data.K24_WING)
        if not 1 <= i <= len(wing):
            raise KeyError(f"unknown catalog entry {name!r}")
        return expand_wing(wing[:i]).checked()
    raise KeyError(f"unknown catalog entry {name!r}")


def _recipe_text(name: str) -> str:
    return resources.files(__package__).joinpath("recipes", f"{name}.spec").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _load_recipe(name: str):
    from ..specfile import parse_spec

    return parse_spec(_recipe_text(name))


def load(name: str) -> CatalogEntry:
    if name in WINGS:
        return CatalogEntry(name, "wing", load_pointset(name), data.EXPECTED.get(name))
    if name in BASES:
        note = "" if name == "base30" else "differs slightly from the K51 full set"
        return CatalogEntry(name, "fullset", load_pointset(name), data.EXPECTED.get(name), note)
    if name in RECIPES:
        return CatalogEntry(name, "recipe", _load_recipe(name), data.EXPECTED[name])
    if name.startswith("W"):
        return CatalogEntry(name, "wing", load_pointset(name), None, "prefix of the K24 wing")
    raise KeyError(f"unknown catalog entry {name!r}")


def partition_for(name: str) -> Partition3:
    """Wing partition: the explicit points form class A, their images B and C."""
    if name in WINGS or (name.startswith("W") and name[1:].isdigit()):
        return wing_partition(len(load_pointset(name)))
    if name in BASES:
        explicit, rotated, m = BASES[name]
        cls = {i - 1: "A" for i in explicit}
        for i, (power, _) in rotated.items():
            cls[i - 1] = "B" if power == 1 else "C"
        return Partition3(cls)
    raise KeyError(f"no partition for {name!r}")


def recipe_partition(name: str) -> Partition3:
    """Partition of a recipe's output: clusters inherit their base point's class."""
    spec = _load_recipe(name)
    base_name = "base30" if len(spec.base) == 30 else "base51"
    base_part = partition_for(base_name)
    mapping = {}
    lab = 0
    for i, s in enumerate(spec.sizes):
        for _ in range(s):
            mapping[lab] = base_part.class_of[i]
            lab += 1
    return Partition3(mapping)


@dataclass
class VerifyResult:
    name: str
    n: int
    expected: Optional[int]
    computed: Optional[int]
    elapsed: float
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems and (self.expected is None or self.expected == self.computed)


def verify_entry(name: str, method: str = "brute") -> VerifyResult:
    from ..construction import count_formula, validate_spec
    from ..crossing_count import count_crossings
    from ..exact_geom import verify_3_symmetric

    t0 = time.perf_counter()
    entry = load(name)
    problems: list[str] = []
    if entry.kind == "recipe":
        bad = validate_spec(entry.payload)
        if bad:
            problems += [str(v) for v in bad]
            computed = None
        else:
            computed = count_formula(entry.payload).total
    else:
        P = entry.payload
        if not verify_3_symmetric(P):
            problems.append("not 3-symmetric about the origin")
        computed = count_crossings(P, method).total
    res = VerifyResult(name, entry.n, entry.expected_crossings, computed,
                       time.perf_counter() - t0, problems)
    if res.expected is not None and computed is not None and computed != res.expected:
        res.problems.append(f"expected {res.expected}, computed {computed}")
    return res


def verify_all(names_: Optional[list[str]] = None) -> list[VerifyResult]:
    todo = names_ if names_ is not None else list(WINGS) + list(BASES) + list(RECIPES)
    return [verify_entry(nm) for nm in todo]


@dataclass
class TableRow:
    n: int
    expected: Optional[int]
    computed: Optional[int]
    status: str
    source: str
    elapsed: float = 0.0


TABLE_SOURCES = {
    24: "K24", 30: "base30", 33: "K33", 42: "K42", 48: "K48", 51: "K51", 54: "K54",
    57: "K57", 60: "K60", 63: "K63", 66: "K66", 69: "K69", 72: "K72", 75: "K75",
    78: "K78", 81: "K81", 84: "K84", 87: "K87", 90: "K90", 93: "K93", 96: "K96",
    99: "K99", 315: "K315",
}


def table_rows(only: Optional[list[int]] = None) -> list[TableRow]:
    """Rows of the results table: reproducible ones are recomputed."""
    ns = sorted(set(TABLE_SOURCES) | set(data.NOT_REPRODUCIBLE))
    if only:
        ns = [n for n in ns if n in only]
    rows = []
    for n in ns:
        if n in data.NOT_REPRODUCIBLE:
            exp = data.TABLE1.get(n, (None, None))[1]
            rows.append(TableRow(n, exp, None, "not-reproducible", "figure only"))
            continue
        src = TABLE_SOURCES[n]
        res = verify_entry(src)
        rows.append(TableRow(n, res.expected, res.computed, "OK" if res.ok else "MISMATCH",
                             src, res.elapsed))
    return rows



