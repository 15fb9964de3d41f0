"""Random valid construction specs, for cross-checking the crossing formula."""
from __future__ import annotations

import random
from fractions import Fraction

from .construction import (
    ClusterModel,
    ConstructionSpec,
    get_model,
    halving_options,
    validate_spec,
)
from .exact_geom import PointSet

__all__ = ["random_pointset", "random_model", "random_spec", "random_cyclic_spec"]


def random_pointset(rng: random.Random, m: int, box: int = 60) -> PointSet:
    """Integer points in general position with no two spanned lines parallel."""
    while True:
        coords = {(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(m)}
        if len(coords) < m:
            continue
        try:
            return PointSet.from_coords(sorted(coords)).checked(require_no_parallel=True)
        except ValueError:
            continue


def random_model(rng: random.Random, s: int) -> ClusterModel:
    if s == 2:
        return get_model("pair")
    if s == 3:
        return get_model(rng.choice(["cup3", "cap3"]))
    while True:
        xs = rng.sample(range(-40, 41), s)
        pts = [(Fraction(x), Fraction(rng.randint(-40, 40))) for x in xs]
        model = ClusterModel.of(f"rand{s}", pts)
        if not model.problems():
            return model


def random_spec(
    rng: random.Random,
    max_n: int = 30,
    max_size: int = 4,
    m_range: tuple[int, int] = (4, 10),
    p_split: float = 0.5,
    tries: int = 200,
) -> ConstructionSpec:
    """A random spec over a random base; splitting lines are preferred with ``p_split``."""
    for _ in range(tries):
        m = rng.randint(*m_range)
        sizes = [rng.randint(1, max_size) for _ in range(m)]
        if sum(sizes) > max_n or all(s == 1 for s in sizes):
            continue
        base = random_pointset(rng, m)
        lines = {}
        ok = True
        for i in (i for i, s in enumerate(sizes) if s > 1):
            opts = halving_options(base, sizes, i)
            # avoid two lines that split each other's clusters
            opts = [o for o in opts if o.sigma is None or lines.get(o.sigma) is None
                    or lines[o.sigma].sigma != i]
            if not opts:
                ok = False
                break
            split = [o for o in opts if o.kind == "splitting"]
            simple = [o for o in opts if o.kind == "simple"]
            pool = split if split and (not simple or rng.random() < p_split) else simple
            lines[i] = rng.choice(pool)
        if not ok:
            continue
        models = {i: random_model(rng, s) for i, s in enumerate(sizes) if s > 1}
        spec = ConstructionSpec(base, sizes, models, lines, "random")
        if not validate_spec(spec):
            return spec
    raise RuntimeError("could not draw a valid random spec")


def random_cyclic_spec(rng: random.Random, m_range: tuple[int, int] = (4, 8), max_size: int = 4,
                       tries: int = 500) -> ConstructionSpec:
    """A random spec whose splitting lines contain a cycle of length >= 3."""
    for _ in range(tries):
        m = rng.randint(*m_range)
        sizes = [rng.randint(2, max_size) for _ in range(m)]
        if sum(sizes) > 30:
            continue
        base = random_pointset(rng, m)
        opts = {i: halving_options(base, sizes, i) for i in range(m)}
        succ = {i: {o.sigma: o for o in opts[i] if o.sigma is not None} for i in range(m)}
        # look for a directed cycle in the "can split" graph by random walks
        cycle = None
        for _ in range(20):
            path = [rng.randrange(m)]
            while True:
                nxt = [j for j in succ[path[-1]] if j not in path[1:]]
                if not nxt:
                    break
                j = rng.choice(nxt)
                if j == path[0] and len(path) >= 3:
                    cycle = path
                    break
                if j in path:
                    break
                path.append(j)
            if cycle:
                break
        if not cycle:
            continue
        lines = {}
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            lines[a] = succ[a][b]
        for i in range(m):
            if i not in lines:
                pool = [o for o in opts[i] if o.sigma is None or lines.get(o.sigma) is None
                        or lines[o.sigma].sigma != i]
                if not pool:
                    break
                lines[i] = rng.choice(pool)
        else:
            models = {i: random_model(rng, s) for i, s in enumerate(sizes)}
            spec = ConstructionSpec(base, sizes, models, lines, "random-cycle")
            if not validate_spec(spec):
                return spec
    raise RuntimeError("could not draw a spec with a splitting cycle")
