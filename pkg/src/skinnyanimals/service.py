"""HTTP service exposing the counting queries.

Thin wrapper: every endpoint validates a pydantic request model, calls the
library, and returns the same QueryResult shape the CLI emits with --json.
Errors map to 400 (bad value / bad document) or 422 (envelope exceeded).
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import EnvelopeError, InputFileError, __version__
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
    hex_animal,
    hex_to_parity,
    parity_to_hex,
    parse_cells,
    parse_word,
    render_cells,
    render_word,
)
from .oracle import Constraint, oracle_count, oracle_enumerate
from .queries import query_doc
from .transfer import cmp_from_doc

Lattice = Literal["hex", "square", "parity"]


class StripQuery(BaseModel):
    lattice: Lattice = "hex"
    height: int = Field(ge=1)
    terms: Optional[int] = Field(default=None, ge=1)
    exact: bool = False


class KhayaQuery(BaseModel):
    terms: int = Field(ge=1)


class BoardQuery(BaseModel):
    lattice: Lattice = "hex"
    bounds: list[int] = Field(min_length=1)
    terms: Optional[int] = Field(default=None, ge=1)


class OracleQuery(BaseModel):
    lattice: Lattice = "hex"
    cells: int = Field(ge=1)
    strip_rows: Optional[int] = None
    bounds: Optional[list[int]] = None
    list_animals: bool = False


class CmpVertex(BaseModel):
    id: int
    weight: int = Field(ge=1)


class CmpEdge(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    source: int = Field(alias="from")
    to: int
    mult: int = Field(ge=1)


class CmpDoc(BaseModel):
    version: int
    vertices: list[CmpVertex]
    edges: list[CmpEdge]
    start: list[int]
    accept: list[int]


class CmpQuery(BaseModel):
    cmp: CmpDoc
    terms: Optional[int] = Field(default=None, ge=1)


class ConvertHexQuery(BaseModel):
    cells: str
    parity: Literal["even", "odd"] = "even"


class ConvertWordQuery(BaseModel):
    word: str


class GfModel(BaseModel):
    num: list[str]
    den: list[str]


class QueryReply(BaseModel):
    query: dict
    series: Optional[list[str]] = None
    gf: Optional[GfModel] = None
    count: Optional[str] = None
    animals: Optional[list[str]] = None
    word: Optional[str] = None
    parity: Optional[str] = None
    cells: Optional[str] = None


def _reply(doc) -> QueryReply:
    return QueryReply(**doc)


def create_app() -> FastAPI:
    app = FastAPI(title="skinnyanimals", version=__version__)

    def guarded(fn, *a, **kw):
        try:
            return fn(*a, **kw)
        except EnvelopeError as e:
            raise HTTPException(status_code=422, detail=str(e)) from e
        except (InputFileError, ValueError) as e:
            raise HTTPException(status_code=400, detail=str(e)) from e

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/strip/series", response_model=QueryReply,
              response_model_exclude_none=True)
    def strip_series_ep(q: StripQuery):
        if q.terms is None:
            raise HTTPException(status_code=400, detail="terms is required")
        fn = exact_strip_series if q.exact else strip_series
        series = guarded(fn, q.height, q.terms, q.lattice)
        query = {"command": "strip-series", "lattice": q.lattice,
                 "height": q.height, "terms": q.terms, "exact": q.exact}
        return _reply(query_doc(query, series=series))

    @app.post("/strip/gf", response_model=QueryReply,
              response_model_exclude_none=True)
    def strip_gf_ep(q: StripQuery):
        fn = exact_strip_gf if q.exact else strip_gf
        gf = guarded(fn, q.height, q.lattice)
        query = {"command": "strip-gf", "lattice": q.lattice,
                 "height": q.height, "exact": q.exact}
        return _reply(query_doc(query, gf=gf))

    @app.post("/khaya", response_model=QueryReply,
              response_model_exclude_none=True)
    def khaya_ep(q: KhayaQuery):
        series = guarded(khaya, q.terms)
        return _reply(query_doc({"command": "khaya", "terms": q.terms},
                                series=series))

    @app.post("/free/series", response_model=QueryReply,
              response_model_exclude_none=True)
    def free_series_ep(q: BoardQuery):
        if q.terms is None:
            raise HTTPException(status_code=400, detail="terms is required")
        series = guarded(free_series, q.bounds, q.terms, q.lattice)
        query = {"command": "free-series", "lattice": q.lattice,
                 "bounds": q.bounds, "terms": q.terms}
        return _reply(query_doc(query, series=series))

    @app.post("/free/gf", response_model=QueryReply,
              response_model_exclude_none=True)
    def free_gf_ep(q: BoardQuery):
        gf = guarded(free_gf, q.bounds, q.lattice)
        query = {"command": "free-gf", "lattice": q.lattice,
                 "bounds": q.bounds}
        return _reply(query_doc(query, gf=gf))

    @app.post("/oracle", response_model=QueryReply,
              response_model_exclude_none=True)
    def oracle_ep(q: OracleQuery):
        def go():
            constraint = None
            if q.strip_rows is not None and q.bounds is not None:
                raise ValueError("strip_rows and bounds are exclusive")
            if q.strip_rows is not None:
                constraint = Constraint(strip_rows=q.strip_rows)
            elif q.bounds is not None:
                constraint = Constraint(board=tuple(q.bounds))
            if q.list_animals:
                animals = sorted(oracle_enumerate(q.lattice, q.cells,
                                                  constraint))
                lines = []
                for a in animals:
                    if a.lattice == "hex":
                        lines.append(f"parity={PARITIES[a.parity]} "
                                     f"{render_cells(a.cells)}")
                    else:
                        lines.append(render_cells(a.cells))
                return str(len(animals)), lines
            return str(oracle_count(q.lattice, q.cells, constraint)), None

        count, lines = guarded(go)
        query = {"command": "oracle", "lattice": q.lattice, "cells": q.cells,
                 "strip_rows": q.strip_rows, "bounds": q.bounds,
                 "list": q.list_animals}
        extra = {"count": count}
        if lines is not None:
            extra["animals"] = lines
        return _reply(query_doc(query, extra=extra))

    @app.post("/cmp/series", response_model=QueryReply,
              response_model_exclude_none=True)
    def cmp_series_ep(q: CmpQuery):
        if q.terms is None:
            raise HTTPException(status_code=400, detail="terms is required")
        cmp = guarded(cmp_from_doc, q.cmp.model_dump(by_alias=True))
        series = guarded(cmp_series, cmp, q.terms)
        return _reply(query_doc({"command": "cmp", "terms": q.terms},
                                series=series))

    @app.post("/cmp/gf", response_model=QueryReply,
              response_model_exclude_none=True)
    def cmp_gf_ep(q: CmpQuery):
        cmp = guarded(cmp_from_doc, q.cmp.model_dump(by_alias=True))
        gf = guarded(cmp_gf, cmp)
        return _reply(query_doc({"command": "cmp"}, gf=gf))

    @app.post("/convert/hex-to-word", response_model=QueryReply,
              response_model_exclude_none=True)
    def hex_to_word_ep(q: ConvertHexQuery):
        def go():
            cells = parse_cells(q.cells)
            parity = PARITIES.index(q.parity)
            animal = hex_animal(cells, parity)
            squares = hex_to_parity(animal)
            return render_word(encode_word(squares)), render_cells(squares)

        word, cells = guarded(go)
        query = {"command": "convert", "direction": "hex-to-word"}
        return _reply(query_doc(query, extra={"word": word, "cells": cells}))

    @app.post("/convert/word-to-hex", response_model=QueryReply,
              response_model_exclude_none=True)
    def word_to_hex_ep(q: ConvertWordQuery):
        def go():
            word = parse_word(q.word)
            animal = parity_to_hex(decode_word(word))
            return PARITIES[animal.parity], render_cells(animal.cells)

        parity, cells = guarded(go)
        query = {"command": "convert", "direction": "word-to-hex"}
        return _reply(query_doc(query,
                                extra={"parity": parity, "cells": cells}))

    return app


app = create_app()
