"""Request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

CHECK_NAMES = ("core", "endo", "aut")

# Exhaustive-oracle ceilings; sweeps clamp to these per check.
CORE_ORACLE_NMAX = 16
ENDO_ORACLE_NMAX = 12
AUT_ORACLE_NMAX = 12


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: str


class ClassifyRequest(BaseModel):
    n: int = Field(ge=3)
    k: int = Field(ge=1)
    brute_aut: bool = False


class PlaneRow(BaseModel):
    """One row of the parameter-plane dataset."""

    n: int
    k: int
    bipartite: bool
    core: bool
    vertex_transitive: bool
    group_graph: bool
    two_gen_monoid_graph: bool
    loopless_obstruction: bool
    aut_order_expected: Optional[int] = None
    aut_order_found: Optional[int] = None


class VerifyRequest(BaseModel):
    n_max: int = Field(ge=3)
    checks: list[Literal["core", "endo", "aut"]] = list(CHECK_NAMES)


class Disagreement(BaseModel):
    n: int
    k: int
    closed_form: str
    oracle: str


class Inconclusive(BaseModel):
    n: int
    k: int
    detail: str


class CheckResult(BaseModel):
    check: str
    n_max_requested: int
    n_max_effective: int
    instances: int
    agreements: int
    disagreements: list[Disagreement] = []
    inconclusive: list[Inconclusive] = []


class VerifyReport(BaseModel):
    results: list[CheckResult]
    ok: bool


class RetractRequest(BaseModel):
    n: int = Field(ge=3)
    k: int = Field(ge=1)
    format: Literal["json", "dot"] = "json"


class RetractResponse(BaseModel):
    n: int
    k: int
    d: int
    a: int
    target: list[int]
    images: list[int]
    dot: Optional[str] = None


class CayleyRequest(BaseModel):
    construction: str
    n: Optional[int] = None
    k: Optional[int] = None
    format: Literal["json", "dot"] = "json"


class CensusModel(BaseModel):
    num_arcs: int
    num_loops: int
    loop_vertices: list[int]
    parallel_digons: int
    antiparallel_digons: int
    num_edges: int


class CayleyResponse(BaseModel):
    construction: str
    order: int
    connection: list[int]
    labels: list[str]
    arcs: list[tuple[int, int, int]]
    census: CensusModel
    dot: Optional[str] = None


class TableRequest(BaseModel):
    name: str


class TableResponse(BaseModel):
    order: int
    table: list[list[int]]
    labels: list[str]
    connection: list[int]


class CheckTableRequest(BaseModel):
    table: TableResponse
    connection: Optional[list[int]] = None
    target: Optional[tuple[int, int]] = None


class AlgebraReportModel(BaseModel):
    associative: bool
    identity: Optional[int]
    is_group: bool
    is_monoid: bool
    idempotents: list[int]
    idempotents_closed: bool
    completely_regular: bool
    is_orthogroup: bool


class CheckTableResponse(BaseModel):
    order: int
    connection: list[int]
    algebra: AlgebraReportModel
    generates: bool
    census: CensusModel
    target: Optional[tuple[int, int]] = None
    matches_target: Optional[bool] = None
    iso_witness: Optional[list[int]] = None


class ScanRequest(BaseModel):
    n_max: int = Field(ge=3, le=64)


class ScanResponse(BaseModel):
    csv: str
