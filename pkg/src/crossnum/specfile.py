"""Reading and writing construction spec files.

A spec file is a sectioned text file::

    [meta]
    name = K63
    [base]
    catalog = base51          # or: file = points.txt (relative to this file)
    [sizes]
    default = 1
    3, 4, 7 = 2
    [models]
    default3 = cup3           # model used for every size-3 cluster not listed
    1, 50 = A12
    4 = A8 mirrored           # reflected in the x-axis
    [lines]
    3 = slope=0.001           # through p3 with direction (1, 0.001)
    22 = rot120of=13          # image of line 13 under the 120 degree rotation
    1 = toward=2              # splitting line from p1 to p2
    5 = 55899.7316 58.88221 1 -2 simple
    [points]                  # optional inline base set, one "x y" per line
    0 0

Point indices are 1-based.  A ``slope=`` line starts with direction
``(1, slope)`` and is reversed when that is needed for the left side to carry
the larger half; direction is otherwise irrelevant for a simple line.
"""
from __future__ import annotations

import os
from .construction import (
    ClusterModel,
    ConstructionSpec,
    PreHalvingLine,
    get_model,
)
from .exact_geom import (
    PointSet,
    Scalar,
    format_scalar,
    parse_pointset,
    parse_scalar,
    read_pointset,
    rotate120,
    rotate_vec120,
)

__all__ = ["SpecFormatError", "parse_spec", "read_spec", "format_spec"]


class SpecFormatError(ValueError):
    pass


SECTIONS = ("meta", "base", "sizes", "models", "lines", "points")


def _sections(text: str) -> dict[str, list[tuple[int, str]]]:
    out: dict[str, list[tuple[int, str]]] = {}
    cur = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            cur = line[1:-1].strip().lower()
            if cur not in SECTIONS and not cur.startswith("model:"):
                raise SpecFormatError(f"line {no}: unknown section [{cur}]")
            if cur in out:
                raise SpecFormatError(f"line {no}: duplicate section [{cur}]")
            out[cur] = []
            continue
        if cur is None:
            raise SpecFormatError(f"line {no}: content before first section")
        out[cur].append((no, line))
    return out


def _keyval(no: int, line: str) -> tuple[str, str]:
    if "=" not in line:
        raise SpecFormatError(f"line {no}: expected 'key = value'")
    k, v = line.split("=", 1)
    return k.strip(), v.strip()


def _indices(no: int, key: str, m: int) -> list[int]:
    out = []
    for tok in key.replace(",", " ").split():
        try:
            i = int(tok)
        except ValueError:
            raise SpecFormatError(f"line {no}: bad index {tok!r}") from None
        if not 1 <= i <= m:
            raise SpecFormatError(f"line {no}: index {i} outside 1..{m}")
        out.append(i - 1)
    return out


def _resolve_base(sec, extra_points, base_dir) -> PointSet:
    if extra_points is not None:
        body = "\n".join(line for _, line in extra_points)
        return parse_pointset(body)
    if sec is None:
        raise SpecFormatError("missing [base] section")
    for no, line in sec:
        key, val = _keyval(no, line)
        if key == "catalog":
            from .catalog import load_pointset

            return load_pointset(val)
        if key == "file":
            path = val if os.path.isabs(val) or base_dir is None else os.path.join(base_dir, val)
            return read_pointset(path)
        raise SpecFormatError(f"line {no}: unknown [base] key {key!r}")
    raise SpecFormatError("[base] section names no base set")


def _sides_weight(base: PointSet, sizes, i: int, d) -> tuple[list[int], int]:
    p = base[i]
    hits = []
    diff = 0
    for j, q in enumerate(base.points):
        if j == i:
            continue
        s = (d[0] * (q.y - p.y) - d[1] * (q.x - p.x)).sign()
        if s == 0:
            hits.append(j)
        else:
            diff += s * sizes[j]
    return hits, diff


def parse_spec(text: str, base_dir: str | None = None) -> ConstructionSpec:
    secs = _sections(text)
    name = ""
    for no, line in secs.get("meta", []):
        key, val = _keyval(no, line)
        if key == "name":
            name = val
    base = _resolve_base(secs.get("base"), secs.get("points"), base_dir)
    m = len(base)

    sizes = [1] * m
    explicit = {}
    for no, line in secs.get("sizes", []):
        key, val = _keyval(no, line)
        try:
            s = int(val)
        except ValueError:
            raise SpecFormatError(f"line {no}: bad size {val!r}") from None
        if key == "default":
            sizes = [s if i not in explicit else explicit[i] for i in range(m)]
            continue
        for i in _indices(no, key, m):
            explicit[i] = s
            sizes[i] = s

    custom: dict[str, ClusterModel] = {}
    for sec, rows in secs.items():
        if sec.startswith("model:"):
            mid = sec[len("model:"):].strip()
            pts = []
            for no, line in rows:
                parts = line.split()
                if len(parts) != 2:
                    raise SpecFormatError(f"line {no}: expected 'x y' in model {mid}")
                pts.append(tuple(parse_scalar(t).rat for t in parts))
            custom[mid] = ClusterModel.of(mid, pts)

    models: dict[int, ClusterModel] = {}
    defaults: dict[int, ClusterModel] = {}
    for no, line in secs.get("models", []):
        key, val = _keyval(no, line)
        try:
            model = custom[val] if val in custom else get_model(val)
        except KeyError as exc:
            raise SpecFormatError(f"line {no}: {exc.args[0]}") from None
        if key.startswith("default"):
            defaults[int(key[len("default"):])] = model
            continue
        for i in _indices(no, key, m):
            models[i] = model
    for i, s in enumerate(sizes):
        if s > 1 and i not in models and s in defaults:
            models[i] = defaults[s]

    raw_lines: dict[int, tuple[int, str]] = {}
    for no, line in secs.get("lines", []):
        key, val = _keyval(no, line)
        idx = _indices(no, key, m)
        if len(idx) != 1:
            raise SpecFormatError(f"line {no}: one index per line entry")
        raw_lines[idx[0]] = (no, val)

    keys = {p.key: j for j, p in enumerate(base.points)}
    resolved: dict[int, PreHalvingLine] = {}
    busy: set[int] = set()

    def resolve(i: int) -> PreHalvingLine:
        if i in resolved:
            return resolved[i]
        if i not in raw_lines:
            raise SpecFormatError(f"no line given for point {i + 1}")
        if i in busy:
            raise SpecFormatError(f"circular line reference at point {i + 1}")
        busy.add(i)
        no, val = raw_lines[i]
        try:
            line = _parse_line(no, i, val)
        except SpecFormatError:
            raise
        except ValueError as exc:
            raise SpecFormatError(f"line {no}: {exc}") from None
        busy.discard(i)
        resolved[i] = line
        return line

    def _parse_line(no: int, i: int, val: str) -> PreHalvingLine:
        if val.startswith("slope="):
            slope = parse_scalar(val[len("slope="):])
            d = (Scalar(1), slope)
            hits, diff = _sides_weight(base, sizes, i, d)
            if len(hits) == 1:
                j = hits[0]
                if ((base[j].x - base[i].x) * d[0] + (base[j].y - base[i].y) * d[1]).sign() < 0:
                    d = (-d[0], -d[1])
                return PreHalvingLine(i, d, "splitting", j)
            if not hits and diff < 0:
                d = (-d[0], -d[1])
            return PreHalvingLine(i, d, "simple")
        if val.startswith("toward="):
            j = _indices(no, val[len("toward="):], m)[0]
            d = (base[j].x - base[i].x, base[j].y - base[i].y)
            return PreHalvingLine(i, d, "splitting", j)
        for prefix, power in (("rot120of=", 1), ("rot240of=", 2)):
            if val.startswith(prefix):
                j = _indices(no, val[len(prefix):], m)[0]
                src = resolve(j)
                p = base[j]
                for _ in range(power):
                    p = rotate120(p)
                if p.key != base[i].key:
                    raise SpecFormatError(f"line {no}: p{i + 1} is not the rotated image of p{j + 1}")
                d = src.direction
                for _ in range(power):
                    d = rotate_vec120(*d)
                sigma = None
                if src.sigma is not None:
                    q = base[src.sigma]
                    for _ in range(power):
                        q = rotate120(q)
                    sigma = keys.get(q.key)
                    if sigma is None:
                        raise SpecFormatError(f"line {no}: rotated target of p{src.sigma + 1} is not a base point")
                return PreHalvingLine(i, d, src.kind, sigma)
        parts = val.split()
        if len(parts) not in (5, 6):
            raise SpecFormatError(f"line {no}: expected 'x y dx dy kind [sigma]' or a shorthand")
        tx, ty, dx, dy = (parse_scalar(t) for t in parts[:4])
        if (tx, ty) != base[i].key:
            raise SpecFormatError(f"line {no}: line does not pass through p{i + 1}")
        kind = parts[4].lower()
        sigma = _indices(no, parts[5], m)[0] if len(parts) == 6 else None
        try:
            return PreHalvingLine(i, (dx, dy), kind, sigma)
        except ValueError as exc:
            raise SpecFormatError(f"line {no}: {exc}") from None

    lines = {i: resolve(i) for i in sorted(raw_lines)}
    return ConstructionSpec(base, sizes, models, lines, name)


def read_spec(path) -> ConstructionSpec:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_spec(text, base_dir=os.path.dirname(os.path.abspath(path)))


def _fmt_q(q) -> str:
    return format_scalar(Scalar(q))


def format_spec(spec: ConstructionSpec) -> str:
    """Self-contained text form with an inline base and explicit lines."""
    out = []
    if spec.name:
        out += ["[meta]", f"name = {spec.name}"]
    out.append("[sizes]")
    out.append("default = 1")
    for i, s in enumerate(spec.sizes):
        if s != 1:
            out.append(f"{i + 1} = {s}")
    named = {}
    custom = {}
    for i in spec.I:
        model = spec.models.get(i)
        if model is not None:
            named[i] = model.id
            try:
                known = get_model(model.id) == model
            except KeyError:
                known = False
            if not known:
                mid = model.id
                if custom.get(mid, model) != model:
                    mid = f"{model.id}-p{i + 1}"
                    named[i] = mid
                custom[mid] = model
    for mid, model in custom.items():
        out.append(f"[model:{mid}]")
        out += [f"{_fmt_q(x)} {_fmt_q(y)}" for x, y in model.points]
    if named:
        out.append("[models]")
        out += [f"{i + 1} = {mid}" for i, mid in sorted(named.items())]
    out.append("[lines]")
    for i, line in sorted(spec.lines.items()):
        p = spec.base[i]
        row = f"{i + 1} = {format_scalar(p.x)} {format_scalar(p.y)} " \
              f"{format_scalar(line.direction[0])} {format_scalar(line.direction[1])} {line.kind}"
        if line.sigma is not None:
            row += f" {line.sigma + 1}"
        out.append(row)
    out.append("[points]")
    out += [f"{format_scalar(p.x)} {format_scalar(p.y)}" for p in spec.base.points]
    return "\n".join(out) + "\n"

