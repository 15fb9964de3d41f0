"""Command-line front end.

Exit codes: 0 on success, 1 when a computed value disagrees with an expected
one, 2 on bad input (unreadable files, malformed or invalid specs, bad flags).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# output


def _decimal(q: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = max(30, digits + len(str(abs(q.numerator) // q.denominator)) + 5)
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return str(d.quantize(Decimal(1).scaleb(-digits)))


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.3f}"
    return str(v)


class Out:
    def __init__(self, args, stream=None):
        self.fmt = args.format
        self.timing = not args.no_timing
        self.digits = args.decimal
        self.stream = stream or sys.stdout

    def _prep(self, row: dict, force_decimal: int | None = None) -> dict:
        digits = self.digits if self.digits is not None else force_decimal
        out = {}
        for k, v in row.items():
            if k == "elapsed" and not self.timing:
                continue
            out[k] = v
            if isinstance(v, Fraction) and digits is not None:
                out[f"{k}_decimal"] = _decimal(v, digits)
        return out

    def table(self, rows: list[dict], force_decimal: int | None = None) -> None:
        rows = [self._prep(r, force_decimal) for r in rows]
        if not rows:
            return
        keys = list(dict.fromkeys(k for r in rows for k in r))
        if self.fmt == "json":
            conv = [{k: (str(v) if isinstance(v, Fraction) else v) for k, v in r.items()} for r in rows]
            print(json.dumps(conv, indent=2), file=self.stream)
        elif self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(keys)
            for r in rows:
                w.writerow([_cell(r.get(k)) for k in keys])
            self.stream.write(buf.getvalue())
        else:
            cells = [[_cell(r.get(k)) for k in keys] for r in rows]
            widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
            print("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip(), file=self.stream)
            for c in cells:
                print("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip(), file=self.stream)

    def record(self, row: dict, force_decimal: int | None = None) -> None:
        row = self._prep(row, force_decimal)
        if self.fmt == "text":
            width = max(len(k) for k in row)
            for k, v in row.items():
                print(f"{k.ljust(width)}  {_cell(v)}", file=self.stream)
        else:
            self.table([row])


# ---------------------------------------------------------------------------
# loading


def _load_points(src: str):
    """A point-set file, or a catalog name (wing, full set, W-prefix or base)."""
    from .catalog import load_pointset
    from .exact_geom import read_pointset

    if os.path.exists(src):
        try:
            return read_pointset(src)
        except (ValueError, OSError) as exc:
            raise InputError(f"{src}: {exc}") from None
    try:
        return load_pointset(src)
    except KeyError:
        raise InputError(f"{src}: no such file or catalog entry") from None


def _load_spec(src: str):
    from .catalog import RECIPES, load
    from .specfile import SpecFormatError, read_spec

    if os.path.exists(src):
        try:
            return read_spec(src)
        except (SpecFormatError, ValueError, KeyError, OSError) as exc:
            raise InputError(f"{src}: {exc}") from None
    if src in RECIPES:
        return load(src).payload
    raise InputError(f"{src}: no such file or recipe")


def _load_partition(src: str, P, name: str):
    from .catalog import partition_for
    from .circular_sequence import Partition3, wing_partition

    if src == "wings":
        if not os.path.exists(name):
            try:
                return partition_for(name)
            except KeyError:
                pass
        try:
            return wing_partition(len(P))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        with open(src, encoding="utf-8") as fh:
            return Partition3.parse(fh.read())
    except (OSError, ValueError) as exc:
        raise InputError(f"{src}: {exc}") from None


def _valid_spec(spec):
    from .construction import validate_spec

    bad = validate_spec(spec)
    if bad:
        raise InputError("invalid construction spec:\n  " + "\n  ".join(map(str, bad)))


# ---------------------------------------------------------------------------
# verbs


def cmd_crossings(args, out: Out) -> int:
    from .crossing_count import count_crossings

    P = _load_points(args.file)
    methods = ["brute", "fast"] if args.method == "both" else [args.method]
    rows = []
    for m in methods:
        rep = count_crossings(P, m)
        rows.append({"n": len(P), "method": m, "crossings": rep.total, "elapsed": rep.elapsed})
    out.table(rows)
    if len({r["crossings"] for r in rows}) > 1:
        print("error: methods disagree", file=sys.stderr)
        return EXIT_MISMATCH
    if args.expect is not None and rows[0]["crossings"] != args.expect:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_ksets(args, out: Out) -> int:
    from .bounds import B
    from .circular_sequence import build_halfperiod, chi_leq_k, classify_transpositions

    P = _load_points(args.file)
    n = len(P)
    if not (1 <= args.k and 2 * args.k < n):
        raise InputError(f"need 1 <= k < n/2 (n = {n})")
    H = build_halfperiod(P, allow_parallel=True)
    row = {"n": n, "k": args.k, "chi_leq_k": chi_leq_k(H, args.k)}
    if n % 3 == 0:
        row["B"] = B(args.k, n)
    if args.partition:
        part = _load_partition(args.partition, P, args.file)
        bi, mono = classify_transpositions(H, part, args.k)
        row["bichromatic"], row["monochromatic"] = bi, mono
    out.record(row)
    return EXIT_OK


def cmd_decompose(args, out: Out) -> int:
    from .circular_sequence import verify_3_decomposable

    P = _load_points(args.file)
    part = _load_partition(args.partition, P, args.file)
    try:
        res = verify_3_decomposable(P, part)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    row = {"n": len(P), "decomposable": res.decomposable}
    for c in "ABC":
        row[f"middle_{c}_at"] = res.witnesses.get(c)
    out.record(row)
    return EXIT_OK if res.decomposable else EXIT_MISMATCH


def cmd_bounds(args, out: Out) -> int:
    from .bounds import B, E, lemma_margin

    n = args.n
    if n <= 0 or n % 3:
        raise InputError("n must be a positive multiple of 3")
    ks = [args.k] if args.k is not None else list(range(1, (n + 1) // 2))
    rows = []
    for k in ks:
        if not (1 <= k and 2 * k < n):
            raise InputError(f"need 1 <= k < n/2 (n = {n})")
        row = {"k": k, "B": B(k, n), "E": None, "lemma_margin": None}
        if 3 * k > n and n - 2 * k - 1 >= 1:
            row["E"] = E(k, n)
            row["lemma_margin"] = lemma_margin(k, n)
        rows.append(row)
    out.table(rows, force_decimal=6)
    return EXIT_OK


def cmd_construct(args, out: Out) -> int:
    from .construction import count_formula

    spec = _load_spec(args.spec)
    _valid_spec(spec)
    rep = count_formula(spec)
    row = {"name": spec.name or "-", "m": spec.m, "n": spec.n}
    row.update({f"type_{k}": v for k, v in rep.breakdown.items()})
    row["crossings"] = rep.total
    row["elapsed"] = rep.elapsed
    out.record(row)
    if args.expect is not None and rep.total != args.expect:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_synth(args, out: Out) -> int:
    from .construction import SynthesisError, count_formula, synthesize_detailed
    from .crossing_count import count_crossings
    from .exact_geom import write_pointset

    spec = _load_spec(args.spec)
    _valid_spec(spec)
    try:
        S = synthesize_detailed(spec, Fraction(args.scale))
    except SynthesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    if args.out:
        write_pointset(S.points, args.out)
    row = {"n": len(S.points), "delta": S.delta, "epsilon": S.epsilon,
           "formula": count_formula(spec).total}
    status = EXIT_OK
    if args.check:
        row["counted"] = count_crossings(S.points, "fast").total
        status = EXIT_OK if row["counted"] == row["formula"] else EXIT_MISMATCH
    out.record(row)
    return status


def cmd_double(args, out: Out) -> int:
    from .construction import count_formula, synthesize_detailed
    from .crossing_count import count_crossings
    from .doubling import double, halving_matching
    from .exact_geom import write_pointset

    P = _load_points(args.file)
    if len(P) % 2 == 0:
        raise InputError("doubling needs an odd number of points")
    base = count_crossings(P, "fast").total
    spec, predicted = double(P, base)
    row = {"m": len(P), "base_crossings": base, "predicted": predicted,
           "formula": count_formula(spec).total}
    status = EXIT_OK if row["formula"] == predicted else EXIT_MISMATCH
    if args.synth or args.out:
        S = synthesize_detailed(spec)
        row["counted"] = count_crossings(S.points, "fast").total
        hm = halving_matching(S.points, [tuple(v) for v in S.clusters().values()])
        row["halving_matching"] = hm.is_injective()
        if row["counted"] != predicted:
            status = EXIT_MISMATCH
        if args.out:
            write_pointset(S.points, args.out)
    out.record(row)
    return status


def cmd_qstar(args, out: Out) -> int:
    from .doubling import qstar_bound

    if args.m < 3:
        raise InputError("need m >= 3")
    out.record({"m": args.m, "cr": args.cr, "qstar_bound": qstar_bound(args.m, args.cr)})
    return EXIT_OK


def cmd_ledger(args, out: Out) -> int:
    from .doubling import iterate_ledger

    if args.m % 2 == 0 or args.m < 3:
        raise InputError("the ledger needs an odd m >= 3")
    led = iterate_ledger(args.m, args.cr, args.steps)
    rows = [{"k": 0, "n": args.m, "predicted": args.cr, "closed_form_ok": True}]
    rows += [{"k": s.k, "n": s.n, "predicted": s.predicted, "closed_form_ok": s.closed_form == s.predicted}
             for s in led.steps]
    out.table(rows)
    if out.fmt == "text":
        print(f"# n^4 coefficient {led.coefficient}; values are for this construction, "
              "not crossing numbers", file=out.stream)
    return EXIT_OK if led.consistent() else EXIT_MISMATCH


def _verify_many(names, threads: int):
    from .catalog import verify_entry

    if threads > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(verify_entry, names))
    return [verify_entry(nm) for nm in names]


def cmd_catalog(args, out: Out) -> int:
    from .catalog import BASES, RECIPES, WINGS, load, load_pointset
    from .exact_geom import write_pointset
    from .specfile import format_spec

    if args.action == "list":
        rows = []
        for nm in list(WINGS) + list(BASES) + list(RECIPES):
            e = load(nm)
            rows.append({"name": nm, "kind": e.kind, "n": e.n, "expected": e.expected_crossings})
        out.table(rows)
        return EXIT_OK
    if args.action == "verify":
        if args.all or args.name is None:
            names = list(WINGS) + list(BASES) + list(RECIPES)
        else:
            names = [args.name]
        try:
            results = _verify_many(names, args.threads)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from None
        rows = [{"name": r.name, "n": r.n, "expected": r.expected, "computed": r.computed,
                 "status": "OK" if r.ok else "MISMATCH", "elapsed": r.elapsed} for r in results]
        out.table(rows)
        for r in results:
            for p in r.problems:
                print(f"{r.name}: {p}", file=sys.stderr)
        return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH
    # export
    if args.name is None or args.file is None:
        raise InputError("usage: catalog export <name> <file>")
    try:
        e = load(args.name)
    except KeyError:
        raise InputError(f"unknown catalog entry {args.name!r}") from None
    if e.kind == "recipe":
        with open(args.file, "w", encoding="utf-8") as fh:
            fh.write(format_spec(e.payload))
    else:
        write_pointset(load_pointset(args.name), args.file)
    return EXIT_OK


def cmd_reproduce_table(args, out: Out) -> int:
    from .catalog import TABLE_SOURCES, table_rows
    from .catalog import data

    known = set(TABLE_SOURCES) | set(data.NOT_REPRODUCIBLE)
    for n in args.only or []:
        if n not in known:
            raise InputError(f"no table row for n = {n}")
    rows = table_rows(args.only)
    if args.threads > 1:
        # recompute in parallel only the rows that need work
        srcs = [r.source for r in rows if r.status != "not-reproducible"]
        res = {r.name: r for r in _verify_many(srcs, args.threads)}
        for r in rows:
            if r.source in res:
                v = res[r.source]
                r.computed, r.elapsed = v.computed, v.elapsed
                r.status = "OK" if v.ok else "MISMATCH"
    table = [{"n": r.n, "expected": r.expected, "computed": r.computed, "status": r.status,
              "elapsed": r.elapsed} for r in rows]
    if out.fmt != "csv":
        for t, r in zip(table, rows):
            t["source"] = r.source
    out.table(table)
    return EXIT_OK if all(r.status in ("OK", "not-reproducible") for r in rows) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "csv", "json"), default=d("text"),
                        help="report format")
    parser.add_argument("--no-timing", action="store_true", default=d(False),
                        help="omit timing fields so output is byte-stable")
    parser.add_argument("--decimal", type=int, metavar="DIGITS", default=d(None),
                        help="also print rationals as decimals")
    parser.add_argument("--threads", type=int, metavar="N", default=d(1),
                        help="worker processes for catalog sweeps")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crossnum", description=__doc__.splitlines()[0])
    _common(p, suppress=False)
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")
    parent = argparse.ArgumentParser(add_help=False)
    _common(parent, suppress=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[parent], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("crossings", cmd_crossings, "count crossings of a point set")
    sp.add_argument("file", help="point-set file or catalog name")
    sp.add_argument("--method", choices=("brute", "fast", "both"), default="fast")
    sp.add_argument("--expect", type=int)

    sp = add("ksets", cmd_ksets, "(<=k)-set counts from the circular sequence")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--partition", help="partition file, or 'wings'")

    sp = add("decompose", cmd_decompose, "check a 3-decomposition")
    sp.add_argument("file")
    sp.add_argument("--partition", required=True, help="partition file, or 'wings'")

    sp = add("bounds", cmd_bounds, "B, E and the degree-count margin")
    sp.add_argument("--n", type=int, required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--k", type=int)
    g.add_argument("--sweep", action="store_true", help="all k (the default)")

    sp = add("construct", cmd_construct, "predicted crossings of a construction spec")
    sp.add_argument("spec", help="spec file or recipe name")
    sp.add_argument("--expect", type=int)

    sp = add("synth", cmd_synth, "build explicit coordinates for a spec")
    sp.add_argument("spec")
    sp.add_argument("--out", help="write the point set here")
    sp.add_argument("--scale", default="1", help="initial cluster scale (rational)")
    sp.add_argument("--check", action="store_true", help="count the result and compare")

    sp = add("double", cmd_double, "double every point of an odd set")
    sp.add_argument("file")
    sp.add_argument("--synth", action="store_true", help="also synthesize and certify")
    sp.add_argument("--out", help="write the doubled point set here (implies --synth)")

    sp = add("qstar", cmd_qstar, "upper bound on the crossing constant")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--cr", type=int, required=True)

    sp = add("ledger", cmd_ledger, "predicted counts of iterated doubling")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--cr", type=int, required=True)
    sp.add_argument("--steps", type=int, required=True)

    sp = add("catalog", cmd_catalog, "list, verify or export catalog entries")
    sp.add_argument("action", choices=("list", "verify", "export"))
    sp.add_argument("name", nargs="?")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--all", action="store_true")

    sp = add("reproduce-table", cmd_reproduce_table, "recompute the table of best counts")
    sp.add_argument("--only", type=int, nargs="+", metavar="N")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    if args.decimal is not None and args.decimal < 0:
        parser.error("--decimal must be nonnegative")
    out = Out(args)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
