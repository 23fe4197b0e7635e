"""Command-line interface: ``vmosaic <command> ...``.

Exit status is 0 on success, 1 on domain errors (invalid mosaic, bad code,
nothing found) and 2 on usage errors (bad arguments, unreadable input).
"""
import argparse
import json
import os
import sys

from . import fixtures as fx
from .errors import BadCode, ParseError, VMosaicError
from .gauss import canonicalize, parse_code
from .indexpoly import crossing_indices, index_polynomial
from .mosaic import load, parse, serialize, validate
from .moves import InjectionSite, eject, inject
from .render import render_ascii, render_svg
from .rowbuild import build_row
from .search import census, row_number_bound, tile_number_bound
from .surface import genus
from .trace import trace


class UsageError(Exception):
    pass


def resolve_path(path):
    """A mosaic path, falling back to the bundled fixture corpus."""
    if os.path.exists(path):
        return path
    root = fx.default_root()
    rel = path.replace("\\", "/")
    if rel.startswith("fixtures/"):
        rel = rel[len("fixtures/"):]
    candidate = os.path.join(root, rel)
    if os.path.exists(candidate):
        return candidate
    base = os.path.basename(rel)
    hits = sorted(os.path.join(d, base) for d, _, files in os.walk(root) if base in files)
    if len(hits) == 1:
        return hits[0]
    raise UsageError(f"no such file: {path}")


def _read_mosaic(path):
    path = resolve_path(path)
    with open(path, encoding="ascii", errors="replace") as fh:
        text = fh.read()
    if not text.strip():
        raise UsageError(f"{path} is empty")
    return parse(text)


def _read_code(arg):
    """A Gauss code given inline, in a text file, or traced from a .vmos file."""
    if os.path.exists(arg) or arg.endswith(".vmos"):
        path = resolve_path(arg)
        with open(path, encoding="ascii", errors="replace") as fh:
            text = fh.read()
        if path.endswith(".vmos"):
            return trace(parse(text)).gauss
        arg = text.strip()
    try:
        return parse_code(arg)
    except ParseError as exc:
        raise BadCode(str(exc)) from None


def _emit_json(args, payload):
    target = getattr(args, "json", None)
    if not target:
        return
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if target == "-":
        sys.stdout.write(text)
    else:
        with open(target, "w", encoding="ascii") as fh:
            fh.write(text)


def _write_out(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands

def cmd_validate(args):
    mosaic = _read_mosaic(args.file)
    report = validate(mosaic)
    print(report)
    _emit_json(args, {"valid": report.valid,
                      "violations": [{"kind": v.kind, "message": v.message} for v in report.violations]})
    return 0 if report.valid else 1


def cmd_genus(args):
    rep = genus(_read_mosaic(args.file))
    print(rep)
    _emit_json(args, rep.to_json())
    return 0


def cmd_trace(args):
    result = trace(_read_mosaic(args.file))
    print(f"components={result.components} crossings={result.crossings}")
    if result.gauss is not None:
        print(result.gauss)
        print("canonical:", canonicalize(result.gauss))
    _emit_json(args, result.to_json())
    return 0


def cmd_poly(args):
    mosaic = _read_mosaic(args.file)
    _, idx = crossing_indices(mosaic)
    poly = index_polynomial(mosaic)
    print(" ".join(str(i) for i in idx.values()))
    print(poly)
    _emit_json(args, {"indices": list(idx.values()), "cells": [list(c) for c in idx],
                      "polynomial": str(poly), "coefficients": poly.to_json()})
    return 0


def cmd_build_row(args):
    mosaic = build_row(_read_code(args.code))
    _write_out(args, serialize(mosaic))
    _emit_json(args, {"width": mosaic.cols, "mosaic": serialize(mosaic)})
    return 0


def _site(args):
    if args.row is not None:
        return InjectionSite.row(args.row)
    if args.col is not None:
        return InjectionSite.column(args.col)
    return InjectionSite.square(*args.square)


def cmd_inject(args):
    out = inject(_read_mosaic(args.file), _site(args))
    _write_out(args, serialize(out))
    return 0


def cmd_eject(args):
    out = eject(_read_mosaic(args.file), _site(args))
    _write_out(args, serialize(out))
    return 0


def cmd_census(args):
    rng = None
    if args.min_crossings is not None or args.max_crossings is not None:
        rng = (args.min_crossings or 0, -1 if args.max_crossings is None else args.max_crossings)
    entries = census(args.rows, args.cols, genus=args.genus, crossing_range=rng,
                     enumerate_blanks=args.enumerate_blanks or None, max_cells=args.max_cells,
                     threads=args.threads)
    for e in entries:
        flags = ("alt" if e.alternating else "") + (" reduced" if e.reduced else "")
        print(f"{e.crossings:3d}  g={e.genus}  {e.code}  {flags.strip()}".rstrip())
    print(f"{len(entries)} entries")
    _emit_json(args, [e.to_json() for e in entries])
    return 0


def cmd_tile_number(args):
    area, witness = tile_number_bound(_read_code(args.code), args.max_area, max_cells=args.max_cells)
    print(f"tile_number<={area} ({witness.rows}x{witness.cols})")
    print(serialize(witness), end="")
    _emit_json(args, {"area": area, "rows": witness.rows, "cols": witness.cols,
                      "mosaic": serialize(witness)})
    return 0


def cmd_row_number(args):
    width, witness = row_number_bound(_read_code(args.code), args.max_width, max_cells=args.max_cells)
    print(f"row_number={width}")
    print(serialize(witness), end="")
    _emit_json(args, {"width": width, "mosaic": serialize(witness)})
    return 0


def cmd_render(args):
    mosaic = _read_mosaic(args.file)
    if args.format == "svg":
        text = render_svg(mosaic, show_closure=args.closure)
    else:
        text = render_ascii(mosaic)
    _write_out(args, text)
    return 0


def cmd_fixtures_check(args):
    report = fx.fixtures_check(args.root, strict_names=args.strict_names)
    for line in report.lines():
        if args.verbose or "FAIL" in line or line.endswith("pass"):
            print(line)
    _emit_json(args, [{"name": e.name, "file": e.file, "ok": not p, "problems": p}
                      for e, p in report.results])
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="vmosaic", description="Rectangular virtual knot mosaics.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file=True):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file", help=".vmos mosaic file")
        sp.add_argument("--json", metavar="PATH", help="write machine-readable output ('-' for stdout)")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check tile and pairing consistency")
    add("genus", cmd_genus, "closure genus and virtual crossing count")
    add("trace", cmd_trace, "trace the diagram and print its Gauss code")
    add("poly", cmd_poly, "intersection indices and index polynomial")

    sp = add("build-row", cmd_build_row, "build a row mosaic for a Gauss code", file=False)
    sp.add_argument("code", help="Gauss code, or a file holding one")
    sp.add_argument("-o", "--output", help="write the mosaic here")

    for name, func in (("inject", cmd_inject), ("eject", cmd_eject)):
        sp = add(name, func, f"{name} a band of two rows and/or columns")
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--row", type=int)
        g.add_argument("--col", type=int)
        g.add_argument("--square", type=int, nargs=2, metavar=("I", "J"))
        sp.add_argument("-o", "--output")

    sp = add("census", cmd_census, "enumerate knots on m x n mosaics", file=False)
    sp.add_argument("--rows", type=int, required=True)
    sp.add_argument("--cols", type=int, required=True)
    sp.add_argument("--genus", type=int)
    sp.add_argument("--min-crossings", type=int)
    sp.add_argument("--max-crossings", type=int)
    sp.add_argument("--enumerate-blanks", action="store_true")
    sp.add_argument("--max-cells", type=int, default=12)
    sp.add_argument("--threads", type=int, help="worker processes (default: VMOSAIC_THREADS or 1)")

    sp = add("tile-number", cmd_tile_number, "least area within a bound", file=False)
    sp.add_argument("code")
    sp.add_argument("--max-area", type=int, required=True)
    sp.add_argument("--max-cells", type=int, default=12)

    sp = add("row-number", cmd_row_number, "least row width within a bound", file=False)
    sp.add_argument("code")
    sp.add_argument("--max-width", type=int, required=True)
    sp.add_argument("--max-cells", type=int, default=12)

    sp = add("render", cmd_render, "draw a mosaic as ASCII or SVG")
    sp.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    sp.add_argument("--closure", action="store_true", help="SVG: draw the boundary gluing")
    sp.add_argument("-o", "--output")

    sp = add("fixtures-check", cmd_fixtures_check, "verify the bundled fixture corpus", file=False)
    sp.add_argument("--root", help="fixture directory (default: bundled corpus)")
    sp.add_argument("--strict-names", action="store_true",
                    help="compare crossing counts with the knot names even for non-minimal drawings")
    sp.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, OSError, UnicodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VMosaicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for item in getattr(exc, "items", ()):
            print(f"  {item}", file=sys.stderr)
        return 1
    except Exception as exc:  # malformed input must not escape as a traceback
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
