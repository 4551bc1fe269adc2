"""Web service exposing the order computations with typed request models."""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import __version__
from .brauer import build_brauer_order
from .catalog import build_category, load_catalog_data, s4_family_objects
from .errors import CatalogError, InternalConsistencyError
from .oracle import run_small_suite
from .relations import assert_partial_order, refines
from .render import biset_payload, brauer_payload, char_table_payload


class HealthResponse(BaseModel):
    status: str
    version: str


class BisetOrderRequest(BaseModel):
    catalog: str | dict = "builtin:s4family"
    jobs: int = 1
    verify: bool = False


class BrauerOrderRequest(BaseModel):
    n: int
    delta: str | int = 1
    verify: bool = False


class OracleCheckRequest(BaseModel):
    suite: str = "small"


class CharTableRequest(BaseModel):
    group: str


class LabelInfo(BaseModel):
    i: int
    r: int
    char_degree: int
    survives: bool
    group: str | None = None
    partition: list[int] | None = None


class CondensedRelation(BaseModel):
    labels: list[list[int]]
    sq: list[list[int]]
    unlhd: list[list[int]]
    leq: list[list[int]]


class MonotonicityReport(BaseModel):
    unlhd_violations: list[list[list[int]]]
    leq_violations: list[list[list[int]]]


class WitnessStep(BaseModel):
    label: list[int]
    partition: list[int]


class NonTransitiveWitness(BaseModel):
    upper: WitnessStep
    middle: WitnessStep
    lower: WitnessStep
    one_step: list[bool]
    closure: bool


class OrderResponse(BaseModel):
    family: str
    labels: list[LabelInfo]
    sq: list[list[int]]
    unlhd: list[list[int]]
    leq: list[list[int]]
    surviving: list[list[int]]
    objects: list[str] | None = None
    condensed: CondensedRelation | None = None
    monotonicity: MonotonicityReport | None = None
    degree: int | None = None
    delta: str | None = None
    non_transitive_witness: NonTransitiveWitness | None = None
    verified: dict | None = None


class ClassInfo(BaseModel):
    size: int
    representative: str
    element_order: int


class CharTableResponse(BaseModel):
    group: str
    order: int
    conductor: int
    degrees: list[int]
    classes: list[ClassInfo]
    rows: list[list[list[str]]]


class OracleCheckResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[dict]


def _load_objects(catalog):
    if isinstance(catalog, str):
        if catalog != "builtin:s4family":
            raise CatalogError(
                'string catalogs must be "builtin:s4family"; pass custom groups inline'
            )
        return s4_family_objects()
    return load_catalog_data(catalog)


def _parse_delta(delta) -> Fraction:
    try:
        value = Fraction(delta)
    except (ValueError, ZeroDivisionError) as exc:
        raise CatalogError(f"bad scale parameter {delta!r}") from exc
    if value == 0:
        raise CatalogError("scale parameter must be nonzero")
    return value


def create_app() -> FastAPI:
    app = FastAPI(title="qhorder", version=__version__)

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/biset-order", response_model=OrderResponse, response_model_exclude_none=True)
    def biset_order(request: BisetOrderRequest) -> OrderResponse:
        try:
            category = build_category(_load_objects(request.catalog))
        except CatalogError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        try:
            rel = category.build_order(jobs=max(1, request.jobs))
            payload = biset_payload(category, rel)
            if request.verify:
                checks = {
                    "mirrored_criterion_matches": category.mirrored_sq_matrix() == rel.sq,
                    "closure_refines_block_order": refines(rel.unlhd, rel.leq),
                    "condensation_respects_coarse_order": not payload["monotonicity"][
                        "unlhd_violations"
                    ],
                }
                assert_partial_order(rel.unlhd, rel.labels)
                assert_partial_order(rel.leq, rel.labels)
                if not all(checks.values()):
                    raise HTTPException(status_code=500, detail={"verify": checks})
                payload["verified"] = checks
        except InternalConsistencyError as exc:
            raise HTTPException(status_code=500, detail=str(exc)) from exc
        return OrderResponse(**payload)

    @app.post("/brauer-order", response_model=OrderResponse, response_model_exclude_none=True)
    def brauer_order(request: BrauerOrderRequest) -> OrderResponse:
        try:
            delta = _parse_delta(request.delta)
            if request.n < 1:
                raise CatalogError("degree must be positive")
        except CatalogError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        try:
            rel = build_brauer_order(request.n, delta)
            payload = brauer_payload(rel)
            if request.verify:
                alternate = delta + 1 if delta != -1 else delta + 2
                checks = {
                    "alternate_scale_matches": build_brauer_order(request.n, alternate).sq
                    == rel.sq,
                    "closure_refines_block_order": refines(rel.unlhd, rel.leq),
                }
                assert_partial_order(rel.unlhd, rel.labels)
                if not all(checks.values()):
                    raise HTTPException(status_code=500, detail={"verify": checks})
                payload["verified"] = checks
        except InternalConsistencyError as exc:
            raise HTTPException(status_code=500, detail=str(exc)) from exc
        return OrderResponse(**payload)

    @app.post(
        "/oracle-check", response_model=OracleCheckResponse, response_model_exclude_none=True
    )
    def oracle_check(request: OracleCheckRequest) -> OracleCheckResponse:
        if request.suite != "small":
            raise HTTPException(status_code=422, detail=f"unknown suite {request.suite!r}")
        return OracleCheckResponse(**run_small_suite())

    @app.post("/char-table", response_model=CharTableResponse)
    def char_table(request: CharTableRequest) -> CharTableResponse:
        try:
            payload = char_table_payload(request.group)
        except CatalogError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return CharTableResponse(**payload)

    return app


app = create_app()
