"""Replacing base points by small flattened clusters.

A :class:`ConstructionSpec` names a base set, a cluster size and model for
every base point, and a directed line through each point that gets a cluster
of size > 1.  :func:`count_formula` predicts the crossing number of the
resulting drawing without building it.  :func:`synthesize` builds explicit
coordinates, so the prediction can be checked by brute force.

Indices are 0-based in code; spec files and messages use 1-based indices.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from . import kernels
from .crossing_count import CrossingReport, count_crossings_brute
from .exact_geom import (
    IntCoords,
    Point,
    PointSet,
    Scalar,
    orient,
    rotate120,
    rotate_vec120,
)

__all__ = [
    "ClusterModel",
    "PreHalvingLine",
    "ConstructionSpec",
    "Violation",
    "SplitSizes",
    "SynthesisError",
    "Synthesis",
    "BUILTIN_MODELS",
    "get_model",
    "validate_spec",
    "halving_options",
    "split_sizes",
    "concavity_counts",
    "count_formula",
    "synthesize",
    "synthesize_detailed",
    "theta_permutation",
]

Vec = tuple[Scalar, Scalar]


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class ClusterModel:
    id: str
    points: tuple[tuple[Fraction, Fraction], ...]

    @staticmethod
    def of(id: str, pts: Sequence[tuple]) -> "ClusterModel":
        return ClusterModel(id, tuple((Fraction(x), Fraction(y)) for x, y in pts))

    def __len__(self):
        return len(self.points)

    def problems(self) -> list[str]:
        out = []
        xs = [x for x, _ in self.points]
        if len(set(xs)) != len(xs):
            out.append("two points share an x-coordinate")
        if len(set(self.points)) != len(self.points):
            out.append("repeated point")
        pts = self.as_points()
        for a, b, c in combinations(pts, 3):
            if orient(a, b, c) == 0:
                out.append(f"collinear triple {a.label, b.label, c.label}")
                break
        return out

    def as_points(self) -> list[Point]:
        return [Point.of(x, y, i) for i, (x, y) in enumerate(self.points)]

    def normalized(self) -> list[tuple[Fraction, Fraction]]:
        """Coordinates centred on the bounding box, x-extent scaled to 1."""
        if len(self.points) == 1:
            return [(Fraction(0), Fraction(0))]
        xs = [x for x, _ in self.points]
        ys = [y for _, y in self.points]
        w = max(xs) - min(xs)
        xm = (max(xs) + min(xs)) / 2
        ym = (max(ys) + min(ys)) / 2
        return [((x - xm) / w, (y - ym) / w) for x, y in self.points]


def _builtin_models() -> dict[str, ClusterModel]:
    from .catalog.data import MODELS

    out = {name: ClusterModel.of(name, pts) for name, pts in MODELS.items()}
    out["pair"] = ClusterModel.of("pair", [(0, 0), (1, 0)])
    out["cup3"] = ClusterModel.of("cup3", [(-1, 1), (0, 0), (1, 1)])
    out["cap3"] = ClusterModel.of("cap3", [(-1, 0), (0, 1), (1, 0)])
    return out


BUILTIN_MODELS: dict[str, ClusterModel] = _builtin_models()
DEFAULT_MODEL_FOR_SIZE = {2: "pair", 3: "cap3"}


def get_model(name: str) -> ClusterModel:
    """Built-in model by id; ``"<id> mirrored"`` reflects it in the x-axis."""
    base, _, mod = name.strip().partition(" ")
    try:
        model = BUILTIN_MODELS[base]
    except KeyError:
        raise KeyError(f"unknown cluster model {name!r}") from None
    if not mod:
        return model
    if mod.strip() != "mirrored":
        raise KeyError(f"unknown model modifier in {name!r}")
    return ClusterModel.of(f"{base} mirrored", [(x, -y) for x, y in model.points])


@dataclass(frozen=True)
class PreHalvingLine:
    through: int
    direction: Vec
    kind: str = "simple"  # or "splitting"
    sigma: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("simple", "splitting"):
            raise ValueError(f"bad line kind {self.kind!r}")
        if (self.kind == "splitting") != (self.sigma is not None):
            raise ValueError("sigma must be given exactly for splitting lines")


@dataclass
class ConstructionSpec:
    base: PointSet
    sizes: list[int]
    models: dict[int, ClusterModel] = field(default_factory=dict)
    lines: dict[int, PreHalvingLine] = field(default_factory=dict)
    name: str = ""

    @property
    def m(self) -> int:
        return len(self.base)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def I(self) -> list[int]:
        return [i for i, s in enumerate(self.sizes) if s > 1]

    def model(self, i: int) -> ClusterModel:
        if i in self.models:
            return self.models[i]
        s = self.sizes[i]
        if s == 1:
            return ClusterModel.of("point", [(0, 0)])
        if s in DEFAULT_MODEL_FOR_SIZE:
            return get_model(DEFAULT_MODEL_FOR_SIZE[s])
        raise KeyError(f"no cluster model for point {i + 1} of size {s}")


@dataclass(frozen=True)
class Violation:
    code: str
    index: Optional[int]
    message: str

    def __str__(self):
        where = f"p{self.index + 1}: " if self.index is not None else ""
        return f"[{self.code}] {where}{self.message}"


@dataclass
class SplitSizes:
    left: dict[int, list[int]]
    right: dict[int, list[int]]
    L: dict[int, int]
    R: dict[int, int]


class SynthesisError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# exact helpers


def _cross(u: Vec, v: Vec) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u: Vec, v: Vec) -> Scalar:
    return u[0] * v[0] + u[1] * v[1]


def _side(p: Point, d: Vec, q: Point) -> int:
    """+1 if q is left of the line through p with direction d."""
    return _cross(d, (q.x - p.x, q.y - p.y)).sign()


def _sides(spec: ConstructionSpec, i: int, line: PreHalvingLine) -> list[int]:
    p = spec.base[i]
    return [0 if j == i else _side(p, line.direction, spec.base[j]) for j in range(spec.m)]


# ---------------------------------------------------------------------------
# validation and split sizes


def validate_spec(spec: ConstructionSpec) -> list[Violation]:
    out: list[Violation] = []
    m = spec.m
    if len(spec.sizes) != m:
        return [Violation("sizes", None, f"{len(spec.sizes)} sizes for {m} base points")]
    for i, s in enumerate(spec.sizes):
        if not isinstance(s, int) or s < 1:
            out.append(Violation("sizes", i, f"cluster size {s} < 1"))
    if out:
        return out
    if not spec.base.checked_general_position:
        try:
            spec.base.checked()
        except ValueError as exc:
            out.append(Violation("base", None, str(exc)))
            return out
    for i in spec.I:
        try:
            model = spec.model(i)
        except KeyError as exc:
            out.append(Violation("model", i, str(exc)))
            continue
        if len(model) != spec.sizes[i]:
            out.append(Violation("model", i, f"model {model.id} has {len(model)} points, size is {spec.sizes[i]}"))
        for msg in model.problems():
            out.append(Violation("model", i, f"model {model.id}: {msg}"))
    for i in spec.lines:
        if not 0 <= i < m:
            out.append(Violation("line", None, f"line for unknown point {i + 1}"))
        elif spec.sizes[i] == 1:
            out.append(Violation("line", i, "line given for a cluster of size 1"))
    for i in spec.I:
        line = spec.lines.get(i)
        if line is None:
            out.append(Violation("line", i, "missing pre-halving line"))
            continue
        if line.through != i:
            out.append(Violation("line", i, f"line is attached to p{line.through + 1}"))
            continue
        if not (line.direction[0] or line.direction[1]):
            out.append(Violation("line", i, "zero direction"))
            continue
        sides = _sides(spec, i, line)
        hits = [j for j in range(m) if j != i and sides[j] == 0]
        sL = sum(spec.sizes[j] for j in range(m) if sides[j] > 0)
        sR = sum(spec.sizes[j] for j in range(m) if j != i and sides[j] < 0)
        diff = sL - sR
        if line.kind == "simple":
            if hits:
                out.append(Violation("3c", i, f"simple line passes through p{hits[0] + 1}"))
            elif not 0 <= diff <= 1:
                out.append(Violation("3b", i, f"left minus right weight is {diff}, expected 0 or 1"))
        else:
            sg = line.sigma
            if sg is None or not 0 <= sg < m or sg == i:
                out.append(Violation("3c", i, f"bad sigma {sg}"))
                continue
            if hits != [sg]:
                out.append(Violation("3c", i, f"splitting line meets {[h + 1 for h in hits]}, expected p{sg + 1}"))
                continue
            p, q = spec.base[i], spec.base[sg]
            if _dot(line.direction, (q.x - p.x, q.y - p.y)).sign() <= 0:
                out.append(Violation("3c", i, f"line not directed towards p{sg + 1}"))
            if abs(diff) > spec.sizes[sg] - 1:
                out.append(Violation("3c", i, f"|left - right| = {abs(diff)} exceeds s_sigma - 1 = {spec.sizes[sg] - 1}"))
    for i, j in combinations(spec.I, 2):
        li, lj = spec.lines.get(i), spec.lines.get(j)
        if li is None or lj is None:
            continue
        if li.sigma == j and lj.sigma == i:
            out.append(Violation("3a", i, f"lines of p{i + 1} and p{j + 1} coincide up to direction"))
    return out


def halving_options(base: PointSet, sizes: Sequence[int], i: int) -> list[PreHalvingLine]:
    """Every pre-halving line through ``p_i`` up to equivalence.

    One simple line per angular gap whose weight difference is 0 or 1, plus
    one splitting line per base point that can absorb the imbalance.
    """
    p = base[i]
    m = len(base)
    rays = []
    for j in range(m):
        if j != i:
            v = (base[j].x - p.x, base[j].y - p.y)
            rays += [v, (-v[0], -v[1])]

    def half(v):
        return 0 if v[1].sign() > 0 or (v[1].sign() == 0 and v[0].sign() > 0) else 1

    def cmp(u, v):
        if half(u) != half(v):
            return half(u) - half(v)
        return -_cross(u, v).sign()

    rays.sort(key=cmp_to_key(cmp))
    out = []
    for a, b in zip(rays, rays[1:] + rays[:1]):
        d = (a[0] + b[0], a[1] + b[1])
        diff = sum(_side(p, d, base[j]) * sizes[j] for j in range(m) if j != i)
        if 0 <= diff <= 1:
            out.append(PreHalvingLine(i, d, "simple"))
    for j in range(m):
        if j == i:
            continue
        d = (base[j].x - p.x, base[j].y - p.y)
        diff = sum(_side(p, d, base[k]) * sizes[k] for k in range(m) if k not in (i, j))
        if abs(diff) <= sizes[j] - 1:
            out.append(PreHalvingLine(i, d, "splitting", j))
    return out


def _require_valid(spec: ConstructionSpec) -> None:
    bad = validate_spec(spec)
    if bad:
        raise ValueError("invalid construction spec:\n" + "\n".join(map(str, bad)))


def split_sizes(spec: ConstructionSpec) -> SplitSizes:
    n = spec.n
    left, right, L, R = {}, {}, {}, {}
    for i in spec.I:
        line = spec.lines[i]
        sides = _sides(spec, i, line)
        li = [j for j in range(spec.m) if sides[j] > 0]
        ri = [j for j in range(spec.m) if j != i and sides[j] < 0]
        left[i], right[i] = li, ri
        if line.kind == "simple":
            L[i] = R[i] = 0
        else:
            rest = n - spec.sizes[i]
            L[i] = (rest + 1) // 2 - sum(spec.sizes[j] for j in li)
            R[i] = rest // 2 - sum(spec.sizes[j] for j in ri)
    return SplitSizes(left, right, L, R)


def concavity_counts(model: ClusterModel) -> tuple[int, int]:
    """(concave up, concave down) counts over x-sorted triples."""
    xs = [x for x, _ in model.points]
    if len(set(xs)) != len(xs):
        raise ValueError(f"model {model.id}: repeated x-coordinate")
    pts = sorted(model.as_points(), key=lambda p: p.x)
    up = down = 0
    for a, b, c in combinations(pts, 3):
        s = orient(a, b, c)
        if s > 0:
            up += 1
        elif s < 0:
            down += 1
        else:
            raise ValueError(f"model {model.id}: collinear triple")
    return up, down


def _model_crossings(model: ClusterModel) -> int:
    if len(model) < 4:
        return 0
    return count_crossings_brute(PointSet(tuple(model.as_points()))).total


def count_formula(spec: ConstructionSpec) -> CrossingReport:
    """Predicted crossings of the drawing, split by crossing type."""
    t0 = time.perf_counter()
    _require_valid(spec)
    n, m, s = spec.n, spec.m, spec.sizes
    sp = split_sizes(spec)
    I = spec.I
    c2 = [comb(x, 2) for x in s]

    table = kernels.orientation_table(spec.base.ints())
    t1 = kernels.convex_count(table, m, s)

    t2 = 0
    for i in I:
        tot = 0
        for side, extra in ((sp.left[i], sp.L[i]), (sp.right[i], sp.R[i])):
            S1 = sum(s[j] for j in side)
            S2 = sum(s[j] * s[j] for j in side)
            tot += (S1 * S1 - S2) // 2 + S1 * extra
        t2 += c2[i] * tot

    sum_c2 = sum(c2)
    twice3 = 0
    for i in I:
        sg = spec.lines[i].sigma
        others = sum_c2 - c2[i] - (c2[sg] if sg is not None else 0)
        twice3 += c2[i] * (others + comb(sp.L[i], 2) + comb(sp.R[i], 2))
        for j in I:
            if spec.lines[j].sigma == i:
                twice3 -= c2[j] * sp.L[j] * sp.R[j]
    if twice3 % 2:
        raise AssertionError("type III double count is odd")
    t3 = twice3 // 2

    t4 = 0
    t5 = 0
    for i in I:
        model = spec.model(i)
        up, down = concavity_counts(model)
        rest = n - s[i]
        t4 += up * ((rest + 1) // 2) + down * (rest // 2)
        t5 += _model_crossings(model)

    total = t1 + t2 + t3 + t4 + t5
    rep = CrossingReport(total, "formula", time.perf_counter() - t0)
    rep.breakdown = {"I": t1, "II": t2, "III": t3, "IV": t4, "V": t5}
    return rep


# ---------------------------------------------------------------------------
# synthesis


def theta_permutation(P: PointSet) -> list[int] | None:
    """Index map of the 120 degree rotation about the origin, if P is invariant."""
    where = {p.key: i for i, p in enumerate(P.points)}
    out = []
    for p in P.points:
        j = where.get(rotate120(p).key)
        if j is None:
            return None
        out.append(j)
    return out


def _spec_is_symmetric(spec: ConstructionSpec, perm: list[int]) -> bool:
    for i in range(spec.m):
        j = perm[i]
        if spec.sizes[i] != spec.sizes[j]:
            return False
        if spec.sizes[i] > 1:
            if spec.model(i).points != spec.model(j).points:
                return False
            li, lj = spec.lines[i], spec.lines[j]
            if rotate_vec120(*li.direction) != tuple(lj.direction):
                return False
    return True


def _norm_scale(d: Vec) -> Fraction:
    """A power of two close to 1/|d|; depends on d only through |d|^2."""
    n2 = float(d[0] * d[0] + d[1] * d[1])
    k = round(math.log2(n2) / 2)
    return Fraction(2) ** (-k)


def _rot90(v: Vec) -> Vec:
    return (-v[1], v[0])


def _add(p: Vec, v: Vec, t=1) -> Vec:
    return (p[0] + v[0] * t, p[1] + v[1] * t)


def _plan(spec: ConstructionSpec) -> list[tuple]:
    """Order of placement steps: ('keep', i), ('aim', i) or ('aim+shift', g, k)."""
    I = spec.I
    sigma = {i: spec.lines[i].sigma for i in I}
    inI = set(I)
    perm = theta_permutation(spec.base)
    if perm is not None and not _spec_is_symmetric(spec, perm):
        perm = None
    black = {i for i in range(spec.m) if i not in inI}
    steps: list[tuple] = []
    for i in I:
        if sigma[i] is None:
            black.add(i)
            steps.append(("keep", i))
    white = {i for i in I if sigma[i] is not None}
    grey: dict[int, int] = {}  # grey point -> root whose line must split it
    while white or grey:
        ready = sorted(i for i in white if sigma[i] in black)
        if ready:
            for i in ready:
                white.discard(i)
                black.add(i)
                steps.append(("aim", i))
            continue
        gready = sorted(g for g in grey if sigma[g] in black)
        if gready:
            g = gready[0]
            steps.append(("aim+shift", g, grey.pop(g)))
            black.add(g)
            continue
        # every remaining white point leads into a cycle; pick roots on it
        x = min(white)
        seen = set()
        while x not in seen:
            seen.add(x)
            x = sigma[x]
        roots = [x]
        if perm is not None:
            roots += [perm[x], perm[perm[x]]]
        for k in roots:
            if k not in white:
                continue
            g = sigma[k]
            if g in grey or g not in white:
                raise SynthesisError("cycle root selection clash")
            white.discard(k)
            black.add(k)
            steps.append(("keep", k))
            white.discard(g)
            grey[g] = k
    return steps


@dataclass
class Synthesis:
    points: PointSet
    cluster_of: list[int]  # output label -> base index
    delta: Fraction
    epsilon: Fraction
    lines: dict[int, tuple[Vec, Vec]]  # base index -> (point on line, direction)

    def clusters(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for lab, i in enumerate(self.cluster_of):
            out.setdefault(i, []).append(lab)
        return out


class _Placer:
    def __init__(self, spec: ConstructionSpec):
        self.spec = spec
        self.steps = _plan(spec)
        self.sp = split_sizes(spec)
        self.norm = {i: spec.model(i).normalized() for i in spec.I}
        self.base = [(p.x, p.y) for p in spec.base.points]

    def _tau(self, xs: list[Fraction], nleft: int, sgn: int) -> Fraction:
        """Cut value so that exactly ``nleft`` of ``xs`` lie left of the line."""
        xs = sorted(xs)
        s = len(xs)
        if sgn > 0:  # left side is x > tau
            cut = s - nleft
        else:
            cut = nleft
        if cut <= 0:
            return xs[0] - Fraction(1, 2)
        if cut >= s:
            return xs[-1] + Fraction(1, 2)
        return (xs[cut - 1] + xs[cut]) / 2

    def layout(self, delta: Fraction):
        """Centres and directions of all clusters for a cluster scale delta."""
        spec = self.spec
        centre: dict[int, Vec] = {}
        direc: dict[int, Vec] = {}
        unit: dict[int, Vec] = {}

        def set_dir(i, d):
            direc[i] = d
            k = _norm_scale(d)
            unit[i] = (d[0] * k, d[1] * k)

        def aim(i) -> Vec:
            """Direction from p_i that splits cluster sigma(i) as required."""
            sg = spec.lines[i].sigma
            p = self.base[i]
            nleft = self.sp.L[i]
            if spec.sizes[sg] == 1:
                v = (self.base[sg][0] - p[0], self.base[sg][1] - p[1])
                sign = 1 if nleft == 1 else -1
                return _add(v, _rot90(v), -sign * delta)
            c, e = centre[sg], unit[sg]
            sgn = _cross((c[0] - p[0], c[1] - p[1]), e).sign()
            if sgn == 0:
                raise SynthesisError(f"line of p{i + 1} is parallel to cluster {sg + 1}")
            xs = [x for x, _ in self.norm[sg]]
            tau = self._tau(xs, nleft, sgn)
            q = _add(c, e, delta * tau)
            return (q[0] - p[0], q[1] - p[1])

        for step in self.steps:
            i = step[1]
            if step[0] == "keep":
                centre[i] = self.base[i]
                set_dir(i, spec.lines[i].direction)
            elif step[0] == "aim":
                centre[i] = self.base[i]
                set_dir(i, aim(i))
            else:
                g, k = step[1], step[2]
                set_dir(g, aim(g))
                e = unit[g]
                sgn = _cross(spec.lines[k].direction, e).sign()
                xs = [x for x, _ in self.norm[g]]
                tau = self._tau(xs, self.sp.L[k], sgn)
                centre[g] = _add(self.base[g], e, -delta * tau)
        return centre, direc, unit

    def points(self, delta, eps, layout):
        centre, direc, unit = layout
        spec = self.spec
        pts: list[Point] = []
        owner: list[int] = []
        xpos: list[Fraction] = []
        for i in range(spec.m):
            if spec.sizes[i] == 1:
                x, y = self.base[i]
                pts.append(Point(x, y, len(pts)))
                owner.append(i)
                xpos.append(Fraction(0))
                continue
            c, e = centre[i], unit[i]
            en = _rot90(e)
            for a, b in self.norm[i]:
                q = _add(_add(c, e, delta * a), en, delta * eps * b)
                pts.append(Point(q[0], q[1], len(pts)))
                owner.append(i)
                xpos.append(a)
        return pts, owner, xpos


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def _check_inherited(ic: IntCoords, owner: list[int], base_ic: IntCoords) -> bool:
    n = ic.n
    for a, b, c in combinations(range(n), 3):
        i, j, k = owner[a], owner[b], owner[c]
        if i == j or j == k or i == k:
            continue
        if ic.orient(a, b, c) != base_ic.orient(i, j, k):
            return False
    return True


def _line_sides(ic: IntCoords, a: int, b: int, members: list[int]) -> tuple[int, ...] | None:
    """Side of every member relative to the line a->b; None if one lies on it."""
    out = []
    for x in members:
        s = ic.orient(a, b, x)
        if s == 0:
            return None
        out.append(s)
    return tuple(out)


def _check_halving(spec, pts, owner, xpos, layout, with_pairs: bool) -> bool:
    """Each cluster line halves the rest; with_pairs also tests spanned lines."""
    centre, direc, unit = layout
    n = len(pts)
    # append, per cluster, the two points spanning its line
    extra = []
    for i in spec.I:
        c, d = centre[i], direc[i]
        p0 = Point(c[0], c[1], n + len(extra))
        p1 = Point(c[0] + d[0], c[1] + d[1], n + len(extra) + 1)
        extra.append((i, len(pts) + len(extra), p0, p1))
    allpts = list(pts)
    for i, _, p0, p1 in extra:
        allpts.extend([p0, p1])
    ic = IntCoords.from_points(allpts)
    for k, (i, _, p0, p1) in enumerate(extra):
        a, b = n + 2 * k, n + 2 * k + 1
        rest = [x for x in range(n) if owner[x] != i]
        ref = _line_sides(ic, a, b, rest)
        if ref is None:
            return False
        if sum(1 for s in ref if s > 0) != _ceil_half(n - spec.sizes[i]):
            return False
        if with_pairs:
            # pairs directed along the model x-axis must split the rest like the line
            mem = sorted((x for x in range(n) if owner[x] == i), key=xpos.__getitem__)
            for u, w in combinations(mem, 2):
                if _line_sides(ic, u, w, rest) != ref:
                    return False
    return True


def synthesize_detailed(
    spec: ConstructionSpec,
    scale: Fraction | int = 1,
    max_halvings: int = 64,
) -> Synthesis:
    _require_valid(spec)
    placer = _Placer(spec)
    base_ic = spec.base.ints()
    delta = Fraction(scale)
    if delta <= 0:
        raise ValueError("scale must be positive")
    zero = Fraction(0)
    for _ in range(max_halvings):
        try:
            lay = placer.layout(delta)
        except SynthesisError:
            # an aiming line met a cluster centre exactly; smaller clusters avoid it
            delta /= 2
            continue
        pts, owner, xpos = placer.points(delta, zero, lay)
        if _check_halving(spec, pts, owner, xpos, lay, with_pairs=False) and _check_inherited(
            IntCoords.from_points(pts), owner, base_ic
        ):
            break
        delta /= 2
    else:
        raise SynthesisError("no cluster scale found within the halving budget")
    eps = Fraction(1)
    for _ in range(max_halvings):
        pts, owner, xpos = placer.points(delta, eps, lay)
        if _check_halving(spec, pts, owner, xpos, lay, with_pairs=True) and _check_inherited(
            IntCoords.from_points(pts), owner, base_ic
        ):
            P = PointSet(tuple(pts)).checked()
            lines = {i: (lay[0][i], lay[1][i]) for i in spec.I}
            return Synthesis(P, owner, delta, eps, lines)
        eps /= 2
    raise SynthesisError("no flattening factor found within the halving budget")


def synthesize(spec: ConstructionSpec, scale: Fraction | int = 1) -> PointSet:
    return synthesize_detailed(spec, scale).points
