"""HTTP service: dataset registry plus statement evaluation.

Endpoints (JSON over HTTP):

* ``GET  /api/datasets``                 — registry listing with schemas
* ``GET  /api/datasets/{id}/preview``    — first ``limit`` raw CSV rows
* ``POST /api/evaluate``                 — run an EvaluationRequest

The registry is read once at startup from a directory of CSV files and
never mutated; identical requests (same seed) produce byte-identical
responses.  Configuration comes from the environment when the app is
built by :func:`app_from_env`: ``TRENDCHECK_DATASETS`` (directory),
``TRENDCHECK_MAX_EXACT_PAIRS`` (baseline/discovery cutoff override).
"""

from __future__ import annotations

import csv
import io
import logging
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .discovery import DEFAULT_MAX_EXACT_PAIRS
from .errors import EmptyPairSpace, EmptyRegion, TrendcheckError, UnknownDataset
from .evaluation import EvaluationRequest, EvaluationResponse, run_evaluation
from .ingest import Dataset, MalformedCsv

log = logging.getLogger("trendcheck.service")


def load_registry(directory: str | Path) -> dict[str, Dataset]:
    """Load every readable ``*.csv`` in the directory, keyed by file stem."""
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError(f"dataset directory not found: {directory}")
    registry: dict[str, Dataset] = {}
    for path in sorted(directory.glob("*.csv")):
        try:
            registry[path.stem] = Dataset.load(path)
        except MalformedCsv as exc:
            log.warning("skipping %s: %s", path.name, exc)
    for dataset_id, ds in registry.items():
        log.info("registered dataset %s (%d rows)", dataset_id, ds.schema.row_count)
    return registry


def create_app(
    dataset_dir: str | Path,
    max_exact_pairs: int = DEFAULT_MAX_EXACT_PAIRS,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service over a dataset directory.

    ``static_dir``, when given, is served at ``/`` so a built web client can
    ride along on the same origin.
    """
    registry = load_registry(dataset_dir)
    app = FastAPI(title="trendcheck", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    def get_dataset(dataset_id: str) -> Dataset:
        if dataset_id not in registry:
            raise UnknownDataset(f"no dataset with id {dataset_id!r}")
        return registry[dataset_id]

    @app.exception_handler(RequestValidationError)
    async def validation_failed(request: Request, exc: RequestValidationError):
        details = [
            {"loc": list(err.get("loc", ())), "msg": err.get("msg", "")}
            for err in exc.errors()
        ]
        return JSONResponse(
            status_code=400, content={"error": "ValidationFailed", "details": details}
        )

    @app.exception_handler(TrendcheckError)
    async def domain_error(request: Request, exc: TrendcheckError):
        if isinstance(exc, UnknownDataset):
            status = 404
        elif isinstance(exc, (EmptyRegion, EmptyPairSpace)):
            status = 422
        else:
            status = 400
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "details": [{"msg": str(exc)}]},
        )

    @app.get("/api/datasets")
    def list_datasets() -> list[dict]:
        return [
            {
                "id": dataset_id,
                "name": ds.name,
                "row_count": ds.schema.row_count,
                "columns": [
                    {"name": c.name, "kind": c.kind} for c in ds.schema.columns
                ],
            }
            for dataset_id, ds in sorted(registry.items())
        ]

    @app.get("/api/datasets/{dataset_id}/preview")
    def preview(dataset_id: str, limit: int = 10) -> PlainTextResponse:
        ds = get_dataset(dataset_id)
        if not 1 <= limit <= 100:
            return JSONResponse(
                status_code=400,
                content={
                    "error": "BadLimit",
                    "details": [{"msg": f"limit must be in [1, 100], got {limit}"}],
                },
            )
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(ds.header)
        for row in ds.rows[:limit]:
            writer.writerow(row)
        return PlainTextResponse(buf.getvalue())

    @app.post("/api/evaluate", response_model=EvaluationResponse)
    def evaluate(request: EvaluationRequest) -> EvaluationResponse:
        ds = get_dataset(request.dataset_id)
        return run_evaluation(ds, request, max_exact_pairs)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def app_from_env() -> FastAPI:
    """App factory driven by environment variables, for uvicorn --factory."""
    dataset_dir = os.environ.get("TRENDCHECK_DATASETS", "datasets")
    max_pairs = int(os.environ.get("TRENDCHECK_MAX_EXACT_PAIRS", DEFAULT_MAX_EXACT_PAIRS))
    static_dir = os.environ.get("TRENDCHECK_UI") or None
    return create_app(dataset_dir, max_pairs, static_dir)
