"""HTTP surface for the library.

A small FastAPI application exposing decompositions, the degree tables,
dimension polynomials, character series, and the verification suites.
The CLI drives this app in-process by default, so every result the CLI
can print is also available over HTTP with the same JSON shape.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .checks import LEMMA_CHECKS, run_check
from .glrep import RepGL, koike_tensor, power, wedge_u
from .partitions import Bipartition
from .walgebra import (torelli_char, traceless_algebra_char,
                       traceless_dim_polynomial, w_table, wedge_uo, wo_table)

SCHEMA = "1"

app = FastAPI(title="tracerep", version="1.0.0")


def parse_bipartition(text: str) -> Bipartition:
    """Parse 'plus|minus' with comma-separated parts, e.g. '2,1|1'.

    '0' or an empty side denotes the empty partition.
    """
    try:
        plus_s, _, minus_s = text.partition("|")
        def side(s):
            s = s.strip()
            if s in ("", "0"):
                return ()
            return tuple(int(p) for p in s.split(","))
        return Bipartition.make(side(plus_s), side(minus_s))
    except (ValueError, TypeError) as exc:
        raise HTTPException(status_code=400,
                            detail=f"cannot parse bipartition {text!r}: {exc}")


class DecomposeRequest(BaseModel):
    kind: str = Field(description="tensor | power | wedge-u | wedge-uo")
    bipartitions: list[str] = Field(default_factory=list)
    degree: int | None = None
    power_kind: str | None = Field(default=None,
                                   description="alternating | symmetric")


class DecomposeResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA, alias="schema")
    kind: str
    result: dict

    model_config = {"populate_by_name": True}


class VerifyRequest(BaseModel):
    lemma: str
    n: int | None = None
    max_degree: int | None = None
    budget: int | None = None


class VerifyResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA, alias="schema")
    lemma: str
    passed: bool
    report: dict

    model_config = {"populate_by_name": True}


@app.get("/health")
def health() -> dict:
    return {"schema": SCHEMA, "status": "ok"}


@app.post("/decompose", response_model=DecomposeResponse,
          response_model_by_alias=True)
def decompose(req: DecomposeRequest) -> DecomposeResponse:
    if req.kind == "tensor":
        if len(req.bipartitions) < 2:
            raise HTTPException(status_code=400,
                                detail="tensor needs two bipartitions")
        out = RepGL({parse_bipartition(req.bipartitions[0]): 1})
        for text in req.bipartitions[1:]:
            out = koike_tensor(out, RepGL({parse_bipartition(text): 1}))
    elif req.kind == "power":
        if len(req.bipartitions) != 1 or req.degree is None or \
                req.power_kind not in ("alternating", "symmetric"):
            raise HTTPException(
                status_code=400,
                detail="power needs one bipartition, --degree and "
                       "power_kind alternating|symmetric")
        out = power(RepGL({parse_bipartition(req.bipartitions[0]): 1}),
                    req.degree, req.power_kind)
    elif req.kind in ("wedge-u", "wedge-uo"):
        if req.degree is None or req.degree < 0:
            raise HTTPException(status_code=400,
                                detail=f"{req.kind} needs --degree >= 0")
        try:
            out = wedge_u(req.degree) if req.kind == "wedge-u" \
                else wedge_uo(req.degree)
        except ArithmeticError as exc:
            raise HTTPException(status_code=500,
                                detail={"error": "nonnegativity",
                                        "message": str(exc)})
    else:
        raise HTTPException(status_code=400,
                            detail=f"unknown decompose kind {req.kind!r}")
    return DecomposeResponse(kind=req.kind, result=out.to_json())


@app.get("/w-table")
def w_table_endpoint(degree: int, variant: str = "ia") -> dict:
    if degree < 0:
        raise HTTPException(status_code=400, detail="degree must be >= 0")
    if variant not in ("ia", "io"):
        raise HTTPException(status_code=400,
                            detail="variant must be 'ia' or 'io'")
    try:
        table = w_table(degree) if variant == "ia" else wo_table(degree)
    except ArithmeticError as exc:
        raise HTTPException(status_code=500,
                            detail={"error": "nonnegativity",
                                    "message": str(exc)})
    return {"schema": SCHEMA, "variant": variant, **table.to_json()}


@app.get("/dim-poly")
def dim_poly(degree: int) -> dict:
    if not 1 <= degree <= 4:
        raise HTTPException(status_code=400,
                            detail="degree must be between 1 and 4")
    coeffs = traceless_dim_polynomial(degree)
    return {
        "schema": SCHEMA,
        "degree": degree,
        "polynomial_degree": len(coeffs) - 1,
        "coefficients_ascending": [
            {"numerator": c.numerator, "denominator": c.denominator}
            for c in coeffs
        ],
    }


@app.get("/torelli-char")
def torelli_char_endpoint(family: str, max_degree: int = 6,
                          algebra: bool = False) -> dict:
    if max_degree < 1:
        raise HTTPException(status_code=400, detail="max_degree must be >= 1")
    try:
        series = traceless_algebra_char(family, max_degree) if algebra \
            else torelli_char(family, max_degree)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return {"schema": SCHEMA, "family": family, "algebra": algebra,
            **series.to_json()}


@app.get("/lemmas")
def lemmas() -> dict:
    return {"schema": SCHEMA, "lemmas": sorted(LEMMA_CHECKS)}


@app.post("/verify", response_model=VerifyResponse,
          response_model_by_alias=True)
def verify(req: VerifyRequest) -> VerifyResponse:
    if req.lemma not in LEMMA_CHECKS:
        raise HTTPException(status_code=404,
                            detail=f"unknown lemma id {req.lemma!r}")
    try:
        report = run_check(req.lemma, n=req.n, max_degree=req.max_degree,
                           budget=req.budget)
    except ArithmeticError as exc:
        raise HTTPException(status_code=500,
                            detail={"error": "nonnegativity",
                                    "message": str(exc)})
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return VerifyResponse(lemma=req.lemma, passed=bool(report["passed"]),
                          report=_jsonable(report))


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj
