"""Result documents and file handling shared by the CLI and the service.

All numbers cross the text boundary as decimal strings: the counts outgrow
64-bit integers quickly and must survive any JSON parser unharmed.  Emitted
JSON is canonical (sorted keys, two-space indent, no floats anywhere), so
parse-and-reserialize is byte-identical.
"""

from __future__ import annotations

import json

from . import InputFileError
from .algebra import RatFn
from .counting import gf_series
from .transfer import Cmp, cmp_from_doc, cmp_to_doc


def poly_strings(poly) -> list:
    """Ascending-degree coefficients as decimal strings; never empty."""
    return [str(c) for c in poly.coeffs] or ["0"]


def gf_fields(gf: RatFn) -> dict:
    return {"num": poly_strings(gf.num), "den": poly_strings(gf.den)}


def query_doc(query: dict, series=None, gf=None, extra=None) -> dict:
    """Assemble a result document; absent fields are omitted.

    When both a series and a generating function are present the first few
    series terms are checked against the expansion before emitting."""
    doc = {"query": query}
    if series is not None:
        doc["series"] = [str(t) for t in series]
    if gf is not None:
        doc["gf"] = gf_fields(gf)
    if series is not None and gf is not None and series:
        probe = min(len(series), 8)
        if gf_series(gf, probe) != list(series[:probe]):
            raise AssertionError("series and generating function disagree")
    if extra:
        doc.update(extra)
    return doc


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load_cmp_file(path) -> Cmp:
    """Read and validate a process document; InputFileError on any defect."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InputFileError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputFileError(f"{path} is not valid JSON: {e}") from e
    return cmp_from_doc(doc)


def dump_cmp(cmp: Cmp) -> str:
    return canonical_json(cmp_to_doc(cmp))
