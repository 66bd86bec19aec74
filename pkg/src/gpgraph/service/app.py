"""HTTP front end; every endpoint delegates to the shared handlers."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..algebra import AlgebraError
from ..gp_core import GraphError
from ..hom_engine import BudgetExhaustedError
from . import handlers
from .models import (
    CayleyRequest,
    CayleyResponse,
    CheckTableRequest,
    CheckTableResponse,
    ClassifyRequest,
    HealthResponse,
    PlaneRow,
    RetractRequest,
    RetractResponse,
    ScanRequest,
    ScanResponse,
    TableRequest,
    TableResponse,
    VerifyReport,
    VerifyRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(title="gpgraph", version=handlers.handle_health().version)

    @app.exception_handler(GraphError)
    async def _graph_error(_: Request, exc: GraphError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(AlgebraError)
    async def _algebra_error(_: Request, exc: AlgebraError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(BudgetExhaustedError)
    async def _budget_error(_: Request, exc: BudgetExhaustedError) -> JSONResponse:
        return JSONResponse(
            status_code=400, content={"detail": f"budget exhausted: {exc}"}
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return handlers.handle_health()

    @app.post("/classify", response_model=PlaneRow)
    def classify(req: ClassifyRequest) -> PlaneRow:
        return handlers.handle_classify(req)

    @app.post("/verify", response_model=VerifyReport)
    def verify(req: VerifyRequest) -> VerifyReport:
        return handlers.handle_verify(req)

    @app.post("/retract", response_model=RetractResponse)
    def retract(req: RetractRequest) -> RetractResponse:
        return handlers.handle_retract(req)

    @app.post("/cayley", response_model=CayleyResponse)
    def cayley(req: CayleyRequest) -> CayleyResponse:
        return handlers.handle_cayley(req)

    @app.post("/table", response_model=TableResponse)
    def table(req: TableRequest) -> TableResponse:
        return handlers.handle_table(req)

    @app.post("/check-table", response_model=CheckTableResponse)
    def check_table(req: CheckTableRequest) -> CheckTableResponse:
        return handlers.handle_check_table(req)

    @app.post("/scan", response_model=ScanResponse)
    def scan(req: ScanRequest) -> ScanResponse:
        return handlers.handle_scan(req)

    return app


app = create_app()
