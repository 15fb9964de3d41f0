"""Exact planar geometry over the field Q(sqrt 3).

Every coordinate is a :class:`Scalar` ``a + b*sqrt(3)`` with rational ``a`` and
``b``.  Predicates never touch floating point.  For bulk work a point set can
be rescaled to integer coordinates in Z[sqrt 3] (see :class:`IntCoords`), which
keeps orientation signs and is much faster than Fraction arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Sequence, Union

__all__ = [
    "Scalar",
    "Point",
    "PointSet",
    "DegenerateInputError",
    "DuplicatePointError",
    "ParallelLinesError",
    "sign_zsqrt3",
    "orient",
    "is_convex_quadruple",
    "rotate120",
    "expand_wing",
    "verify_3_symmetric",
    "IntCoords",
    "parse_scalar",
    "format_scalar",
    "parse_pointset",
    "read_pointset",
    "format_pointset",
    "write_pointset",
]

Number = Union[int, Fraction, "Scalar"]


class DegenerateInputError(ValueError):
    """Raised when a predicate meets collinear or coincident input."""


class DuplicatePointError(DegenerateInputError):
    pass


class ParallelLinesError(DegenerateInputError):
    """Two lines spanned by the point set are parallel."""

    def __init__(self, pair1, pair2):
        self.pair1 = pair1
        self.pair2 = pair2
        super().__init__(f"spanned lines {pair1} and {pair2} are parallel")


def sign_zsqrt3(a, b) -> int:
    """Sign of ``a + b*sqrt(3)`` for rationals (or ints) ``a`` and ``b``."""
    if a >= 0 and b >= 0:
        return 1 if (a or b) else 0
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: the larger square wins
    d = a * a - 3 * b * b
    if d > 0:
        return 1 if a > 0 else -1
    # d == 0 is impossible for nonzero rationals since sqrt 3 is irrational
    return 1 if b > 0 else -1


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot build an exact rational from {type(v).__name__}")


@total_ordering
class Scalar:
    """Element ``rat + root*sqrt(3)`` of Q(sqrt 3), immutable and exact."""

    __slots__ = ("rat", "root")

    def __init__(self, rat=0, root=0):
        object.__setattr__(self, "rat", _frac(rat))
        object.__setattr__(self, "root", _frac(root))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @property
    def rat_part(self) -> Fraction:
        return self.rat

    @property
    def root_part(self) -> Fraction:
        return self.root

    @staticmethod
    def coerce(v: Number) -> "Scalar":
        if isinstance(v, Scalar):
            return v
        return Scalar(v, 0)

    @classmethod
    def sqrt3(cls) -> "Scalar":
        return cls(0, 1)

    def is_rational(self) -> bool:
        return self.root == 0

    def sign(self) -> int:
        return sign_zsqrt3(self.rat, self.root)

    def conjugate(self) -> "Scalar":
        return Scalar(self.rat, -self.root)

    def norm(self) -> Fraction:
        """Field norm a^2 - 3b^2."""
        return self.rat * self.rat - 3 * self.root * self.root

    def mul_sqrt3(self) -> "Scalar":
        return Scalar(3 * self.root, self.rat)

    def __add__(self, o):
        if isinstance(o, (int, Fraction)):
            return Scalar(self.rat + o, self.root)
        if isinstance(o, Scalar):
            return Scalar(self.rat + o.rat, self.root + o.root)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.rat, -self.root)

    def __pos__(self):
        return self

    def __sub__(self, o):
        if isinstance(o, (int, Fraction)):
            return Scalar(self.rat - o, self.root)
        if isinstance(o, Scalar):
            return Scalar(self.rat - o.rat, self.root - o.root)
        return NotImplemented

    def __rsub__(self, o):
        if isinstance(o, (int, Fraction)):
            return Scalar(o - self.rat, -self.root)
        return NotImplemented

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return Scalar(self.rat * o, self.root * o)
        if isinstance(o, Scalar):
            a, b, c, d = self.rat, self.root, o.rat, o.root
            return Scalar(a * c + 3 * b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(self.rat / nrm, -self.root / nrm)

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            if o == 0:
                raise ZeroDivisionError("division by zero Scalar")
            return Scalar(self.rat / o, self.root / o)
        if isinstance(o, Scalar):
            return self * o.inverse()
        return NotImplemented

    def __rtruediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return Scalar(o) * self.inverse()
        return NotImplemented

    def __eq__(self, o):
        if isinstance(o, Scalar):
            return self.rat == o.rat and self.root == o.root
        if isinstance(o, (int, Fraction)):
            return self.root == 0 and self.rat == o
        return NotImplemented

    def __lt__(self, o):
        if isinstance(o, (int, Fraction, Scalar)):
            return (self - o).sign() < 0
        return NotImplemented

    def __hash__(self):
        if self.root == 0:
            return hash(self.rat)
        return hash((self.rat, self.root))

    def __bool__(self):
        return bool(self.rat) or bool(self.root)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.rat) + float(self.root) * math.sqrt(3.0)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def __reduce__(self):
        return (Scalar, (self.rat, self.root))


ZERO = Scalar(0)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar
    label: int = 0

    @staticmethod
    def of(x: Number, y: Number, label: int = 0) -> "Point":
        return Point(Scalar.coerce(x), Scalar.coerce(y), label)

    @property
    def key(self) -> tuple:
        """Coordinates only; used for set comparisons."""
        return (self.x, self.y)

    def relabel(self, label: int) -> "Point":
        return Point(self.x, self.y, label)

    def __sub__(self, o: "Point") -> tuple[Scalar, Scalar]:
        return (self.x - o.x, self.y - o.y)

    def __repr__(self):
        return f"Point({format_scalar(self.x)}, {format_scalar(self.y)}, label={self.label})"


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p); +1 means counterclockwise."""
    ux, uy = q.x - p.x, q.y - p.y
    vx, vy = r.x - p.x, r.y - p.y
    return (ux * vy - uy * vx).sign()


def _inside(p: Point, a: Point, b: Point, c: Point) -> bool:
    s = orient(a, b, c)
    return orient(a, b, p) == s and orient(b, c, p) == s and orient(c, a, p) == s


def is_convex_quadruple(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the four points are in convex position."""
    quad = (a, b, c, d)
    for tri in combinations(quad, 3):
        if orient(*tri) == 0:
            raise DegenerateInputError("collinear triple in quadruple")
    for i in range(4):
        others = [quad[j] for j in range(4) if j != i]
        if _inside(quad[i], *others):
            return False
    return True


def rotate_vec120(x: Scalar, y: Scalar) -> tuple[Scalar, Scalar]:
    """Counterclockwise rotation of a vector by 120 degrees."""
    x = Scalar.coerce(x)
    y = Scalar.coerce(y)
    nx = -x * HALF - y.mul_sqrt3() * HALF
    ny = x.mul_sqrt3() * HALF - y * HALF
    return nx, ny


def rotate120(p: Point, center: Point | None = None) -> Point:
    if center is None:
        nx, ny = rotate_vec120(p.x, p.y)
        return Point(nx, ny, p.label)
    nx, ny = rotate_vec120(p.x - center.x, p.y - center.y)
    return Point(nx + center.x, ny + center.y, p.label)


@dataclass(frozen=True)
class PointSet:
    """Labeled point set.  Use :meth:`checked` to certify general position."""

    points: tuple[Point, ...]
    checked_general_position: bool = False
    checked_no_parallel: bool = False
    _ints: "IntCoords | None" = field(default=None, compare=False, repr=False)

    @staticmethod
    def from_coords(coords: Iterable[tuple], check: bool = True) -> "PointSet":
        pts = tuple(Point.of(x, y, i) for i, (x, y) in enumerate(coords))
        ps = PointSet(pts)
        return ps.checked() if check else ps

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def labels(self) -> list[int]:
        return [p.label for p in self.points]

    def ints(self) -> "IntCoords":
        if self._ints is None:
            object.__setattr__(self, "_ints", IntCoords.from_points(self.points))
        return self._ints

    def check_distinct(self) -> None:
        seen = {}
        for p in self.points:
            if p.key in seen:
                raise DuplicatePointError(f"points {seen[p.key]} and {p.label} coincide")
            seen[p.key] = p.label
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels in point set")

    def collinear_triple(self) -> tuple[int, int, int] | None:
        """Labels of some collinear triple, or None."""
        ic = self.ints()
        n = len(self.points)
        for i, j, k in combinations(range(n), 3):
            if ic.orient(i, j, k) == 0:
                return (self.points[i].label, self.points[j].label, self.points[k].label)
        return None

    def parallel_pairs(self) -> tuple[tuple[int, int], tuple[int, int]] | None:
        """Two disjoint-or-not label pairs spanning parallel lines, or None."""
        seen: dict = {}
        pts = self.points
        for i, j in combinations(range(len(pts)), 2):
            dx = pts[j].x - pts[i].x
            dy = pts[j].y - pts[i].y
            key = ("inf",) if dx == 0 else (dy / dx)
            if key in seen:
                a, b = seen[key]
                return ((pts[a].label, pts[b].label), (pts[i].label, pts[j].label))
            seen[key] = (i, j)
        return None

    def checked(self, require_no_parallel: bool = False) -> "PointSet":
        """Return a copy certified to be in general position."""
        self.check_distinct()
        bad = self.collinear_triple()
        if bad is not None:
            raise DegenerateInputError(f"collinear points {bad}")
        par = self.parallel_pairs()
        if par is not None and require_no_parallel:
            raise ParallelLinesError(*par)
        return PointSet(self.points, True, par is None, self._ints)

    def relabeled(self) -> "PointSet":
        pts = tuple(p.relabel(i) for i, p in enumerate(self.points))
        return PointSet(pts, self.checked_general_position, self.checked_no_parallel)

    def transformed(self, fn) -> "PointSet":
        pts = tuple(fn(p) for p in self.points)
        return PointSet(pts)


def expand_wing(wing: PointSet | Sequence[Point]) -> PointSet:
    """The union of a wing with its images under 120 and 240 degree rotation."""
    pts = list(wing.points if isinstance(wing, PointSet) else wing)
    if not pts:
        raise ValueError("empty wing")
    w = len(pts)
    out = []
    for p in pts:
        out.append(Point(p.x, p.y, len(out)))
    for p in pts:
        out.append(rotate120(p).relabel(len(out)))
    for p in pts:
        out.append(rotate120(rotate120(p)).relabel(len(out)))
    ps = PointSet(tuple(out))
    ps.check_distinct()
    assert len(ps) == 3 * w
    return ps


def verify_3_symmetric(P: PointSet, center: Point | None = None) -> bool:
    keys = {p.key for p in P.points}
    for p in P.points:
        if rotate120(p, center).key not in keys:
            return False
    return True


class IntCoords:
    """Coordinates rescaled by a positive common denominator into Z[sqrt 3].

    Each coordinate ``a + b*sqrt(3)`` is stored as the integer pair
    ``(a*D, b*D)``.  Positive scaling leaves every orientation unchanged.
    """

    __slots__ = ("xa", "xb", "ya", "yb", "scale", "n")

    def __init__(self, xa, xb, ya, yb, scale):
        self.xa, self.xb, self.ya, self.yb = xa, xb, ya, yb
        self.scale = scale
        self.n = len(xa)

    @classmethod
    def from_points(cls, pts: Sequence[Point]) -> "IntCoords":
        den = 1
        for p in pts:
            for s in (p.x, p.y):
                den = math.lcm(den, s.rat.denominator, s.root.denominator)

        def scaled(v: Fraction) -> int:
            return v.numerator * (den // v.denominator)

        return cls(
            [scaled(p.x.rat) for p in pts],
            [scaled(p.x.root) for p in pts],
            [scaled(p.y.rat) for p in pts],
            [scaled(p.y.root) for p in pts],
            den,
        )

    def is_rational(self) -> bool:
        return not any(self.xb) and not any(self.yb)

    def orient(self, i: int, j: int, k: int) -> int:
        xa, xb, ya, yb = self.xa, self.xb, self.ya, self.yb
        uxa = xa[j] - xa[i]
        uxb = xb[j] - xb[i]
        uya = ya[j] - ya[i]
        uyb = yb[j] - yb[i]
        vxa = xa[k] - xa[i]
        vxb = xb[k] - xb[i]
        vya = ya[k] - ya[i]
        vyb = yb[k] - yb[i]
        a = uxa * vya + 3 * uxb * vyb - uya * vxa - 3 * uyb * vxb
        b = uxa * vyb + uxb * vya - uya * vxb - uyb * vxa
        return sign_zsqrt3(a, b)

    def vec(self, i: int, j: int) -> tuple[int, int, int, int]:
        """Vector p_j - p_i as (xa, xb, ya, yb)."""
        return (
            self.xa[j] - self.xa[i],
            self.xb[j] - self.xb[i],
            self.ya[j] - self.ya[i],
            self.yb[j] - self.yb[i],
        )


def cross_zsqrt3(u, v) -> int:
    """Sign of the cross product of two Z[sqrt 3] vectors (xa, xb, ya, yb)."""
    uxa, uxb, uya, uyb = u
    vxa, vxb, vya, vyb = v
    a = uxa * vya + 3 * uxb * vyb - uya * vxa - 3 * uyb * vxb
    b = uxa * vyb + uxb * vya - uya * vxb - uyb * vxa
    return sign_zsqrt3(a, b)


# ---------------------------------------------------------------------------
# text I/O

def _parse_rat(tok: str) -> Fraction:
    if "/" in tok:
        num, den = tok.split("/")
        return Fraction(num) / Fraction(den)
    return Fraction(tok)


def parse_scalar(tok: str) -> Scalar:
    """Parse ``3716.08787``, ``-7/2``, ``1/2+3/4*s3``, ``-s3`` and similar."""
    tok = tok.strip().replace(" ", "")
    if not tok:
        raise ValueError("empty coordinate")
    try:
        if not tok.endswith("s3"):
            return Scalar(_parse_rat(tok))
        body = tok[:-2]
        if body.endswith("*"):
            body = body[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            rat, coef = body[:cut], body[cut:]
        else:
            rat, coef = "", body
        if coef in ("", "+"):
            c = Fraction(1)
        elif coef == "-":
            c = Fraction(-1)
        else:
            c = _parse_rat(coef)
        return Scalar(_parse_rat(rat) if rat else 0, c)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed coordinate {tok!r}") from exc


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(s: Scalar) -> str:
    if s.root == 0:
        return _fmt_rat(s.rat)
    root = f"{_fmt_rat(abs(s.root))}*s3"
    if s.rat == 0:
        return root if s.root > 0 else "-" + root
    return f"{_fmt_rat(s.rat)}{'+' if s.root > 0 else '-'}{root}"


def parse_pointset(text: str, check: bool = True) -> PointSet:
    """Parse the plain-text point format; a ``wing`` line requests expansion."""
    coords = []
    wing = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower() == "wing":
            wing = True
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"expected 'x y', got {raw!r}")
        coords.append((parse_scalar(parts[0]), parse_scalar(parts[1])))
    if not coords:
        raise ValueError("no points found")
    pts = tuple(Point(x, y, i) for i, (x, y) in enumerate(coords))
    ps = expand_wing(pts) if wing else PointSet(pts)
    return ps.checked() if check else ps


def read_pointset(path, check: bool = True) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        return parse_pointset(fh.read(), check=check)


def format_pointset(P: PointSet) -> str:
    return "".join(f"{format_scalar(p.x)} {format_scalar(p.y)}\n" for p in P.points)


def write_pointset(P: PointSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_pointset(P))
