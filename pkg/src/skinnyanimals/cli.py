"""Command-line front end.

Every counting operation is reachable as a subcommand; `--json` swaps the
human-readable text for one canonical QueryResult document on stdout.
Diagnostics go to stderr only.  Exit codes: 0 success, 2 usage error,
3 invalid input file, 4 out-of-envelope request.
"""

from __future__ import annotations

import argparse
import sys

from . import EnvelopeError, InputFileError
from .counting import (
    cmp_gf,
    cmp_series,
    exact_strip_gf,
    exact_strip_series,
    free_gf,
    free_series,
    khaya,
    strip_gf,
    strip_series,
)
from .hexmap import (
    PARITIES,
    decode_word,
    encode_word,
    hex_to_parity,
    parity_to_hex,
    parse_hex_text,
    parse_word,
    render_cells,
    render_hex_text,
    render_word,
)
from .oracle import Constraint, oracle_count, oracle_enumerate
from .queries import canonical_json, load_cmp_file, query_doc

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAD_FILE = 3
EXIT_ENVELOPE = 4


def _bounds(text):
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad bounds list: {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("bounds must be positive integers")
    return values


def _series_text(series):
    return ",".join(str(t) for t in series)


def cmd_strip_gf(args):
    fn = exact_strip_gf if args.exact else strip_gf
    gf = fn(args.height, args.lattice)
    query = {"command": "strip-gf", "lattice": args.lattice,
             "height": args.height, "exact": bool(args.exact)}
    return query_doc(query, gf=gf), gf.pretty()


def cmd_strip_series(args):
    fn = exact_strip_series if args.exact else strip_series
    series = fn(args.height, args.terms, args.lattice)
    query = {"command": "strip-series", "lattice": args.lattice,
             "height": args.height, "terms": args.terms,
             "exact": bool(args.exact)}
    return query_doc(query, series=series), _series_text(series)


def cmd_khaya(args):
    series = khaya(args.terms)
    query = {"command": "khaya", "terms": args.terms}
    return query_doc(query, series=series), _series_text(series)


def cmd_free_gf(args):
    gf = free_gf(args.bounds, args.lattice)
    query = {"command": "free-gf", "lattice": args.lattice,
             "bounds": args.bounds}
    return query_doc(query, gf=gf), gf.pretty()


def cmd_free_series(args):
    series = free_series(args.bounds, args.terms, args.lattice)
    query = {"command": "free-series", "lattice": args.lattice,
             "bounds": args.bounds, "terms": args.terms}
    return query_doc(query, series=series), _series_text(series)


def _animal_line(animal):
    if animal.lattice == "hex":
        return f"parity={PARITIES[animal.parity]} {render_cells(animal.cells)}"
    return render_cells(animal.cells)


def cmd_oracle(args):
    constraint = None
    if args.strip_rows is not None:
        constraint = Constraint(strip_rows=args.strip_rows)
    elif args.bounds is not None:
        constraint = Constraint(board=tuple(args.bounds))
    query = {"command": "oracle", "lattice": args.lattice,
             "cells": args.cells,
             "strip_rows": args.strip_rows,
             "bounds": args.bounds,
             "list": bool(args.list)}
    if args.list:
        animals = sorted(oracle_enumerate(args.lattice, args.cells, constraint))
        lines = [_animal_line(a) for a in animals]
        doc = query_doc(query, extra={"count": str(len(animals)),
                                      "animals": lines})
        return doc, "\n".join(lines + [f"count: {len(animals)}"])
    count = oracle_count(args.lattice, args.cells, constraint)
    return query_doc(query, extra={"count": str(count)}), str(count)


def cmd_cmp(args):
    cmp = load_cmp_file(args.file)
    query = {"command": "cmp", "file": args.file}
    if args.series is not None:
        query["terms"] = args.series
        series = cmp_series(cmp, args.series)
        return query_doc(query, series=series), _series_text(series)
    gf = cmp_gf(cmp)
    return query_doc(query, gf=gf), gf.pretty()


def cmd_convert(args):
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputFileError(f"cannot read {args.input}: {e}") from e
    try:
        if args.hex_to_word:
            animal = parse_hex_text(text)
            squares = hex_to_parity(animal)
            word = encode_word(squares)
            query = {"command": "convert", "direction": "hex-to-word",
                     "input": args.input}
            doc = query_doc(query, extra={"word": render_word(word),
                                          "cells": render_cells(squares)})
            return doc, render_word(word)
        word = parse_word(text)
        squares = decode_word(word)
        animal = parity_to_hex(squares)
        query = {"command": "convert", "direction": "word-to-hex",
                 "input": args.input}
        doc = query_doc(query, extra={
            "parity": PARITIES[animal.parity],
            "cells": render_cells(animal.cells)})
        return doc, render_hex_text(animal).rstrip("\n")
    except ValueError as e:
        raise InputFileError(str(e)) from e


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return None, None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skinny",
        description="Count strip-confined and column-bounded lattice animals "
                    "on the hexagonal and square lattices.")
    parser.add_argument("--json", action="store_true",
                        help="emit one canonical JSON document on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def new(name, handler, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="emit one canonical JSON document on stdout")
        sp.set_defaults(handler=handler)
        return sp

    def lattice_arg(sp):
        sp.add_argument("--lattice", choices=("hex", "square"),
                        required=True, help="lattice to count on")

    sp = new("strip-gf", cmd_strip_gf,
             "generating function for a height-bounded strip")
    lattice_arg(sp)
    sp.add_argument("--height", type=int, required=True,
                    help="strip height in square rows")
    sp.add_argument("--exact", action="store_true",
                    help="animals of exactly this height")

    sp = new("strip-series", cmd_strip_series,
             "counting series for a height-bounded strip")
    lattice_arg(sp)
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--terms", type=int, required=True,
                    help="number of cell counts to report")
    sp.add_argument("--exact", action="store_true")

    sp = new("khaya", cmd_khaya, "total hexanimal counts by cell number")
    sp.add_argument("--terms", type=int, required=True)

    sp = new("free-gf", cmd_free_gf,
             "generating function under per-column span bounds")
    lattice_arg(sp)
    sp.add_argument("--bounds", type=_bounds, required=True,
                    help="comma-separated spans, k-th entry for k-block columns")

    sp = new("free-series", cmd_free_series,
             "counting series under per-column span bounds")
    lattice_arg(sp)
    sp.add_argument("--bounds", type=_bounds, required=True)
    sp.add_argument("--terms", type=int, required=True)

    sp = new("oracle", cmd_oracle, "brute-force enumeration cross-check")
    lattice_arg(sp)
    sp.add_argument("--cells", type=int, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--strip-rows", type=int, default=None)
    group.add_argument("--bounds", type=_bounds, default=None)
    sp.add_argument("--list", action="store_true",
                    help="print the animals, not just the count")

    sp = new("cmp", cmd_cmp, "solve a custom weighted process from a file")
    sp.add_argument("--file", required=True, help="CmpFile JSON document")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--gf", action="store_true")
    group.add_argument("--series", type=int, default=None, metavar="L")

    sp = new("convert", cmd_convert, "hexanimal / interval-word conversion")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--hex-to-word", action="store_true")
    group.add_argument("--word-to-hex", action="store_true")
    sp.add_argument("--input", required=True, help="input text file")

    sp = new("serve", cmd_serve, "run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        doc, text = args.handler(args)
    except InputFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_FILE
    except EnvelopeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ENVELOPE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if doc is None:
        return EXIT_OK
    if args.json:
        sys.stdout.write(canonical_json(doc))
    else:
        print(text)
    return EXIT_OK


def main() -> int:
    return run()
