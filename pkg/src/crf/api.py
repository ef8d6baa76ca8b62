"""HTTP API over a project directory, consumed by the dashboard.

JSON over HTTP/1.1; every response body carries a schema_version field.
Errors are JSON with `code` and `detail`: 400 validation (with structured
errors), 404 unknown id, 409 lock conflict, 500 I/O. GETs are side-effect
free; mutations serialize through the store's single-writer lock.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import reporting
from .errors import LockError, NotFoundError, StorageError, ValidationError
from .reporting import Override
from .scoring import EnablerAssessment
from .store import ProjectStore

SCHEMA_VERSION = reporting.SCHEMA_VERSION


def _ok(doc: dict, status: int = 200) -> JSONResponse:
    doc.setdefault("schema_version", SCHEMA_VERSION)
    return JSONResponse(doc, status_code=status)


def _error(status: int, code: str, detail: str, errors: list | None = None) -> JSONResponse:
    body = {"schema_version": SCHEMA_VERSION, "code": code, "detail": detail}
    if errors:
        body["errors"] = errors
    return JSONResponse(body, status_code=status)


async def _body(request: Request) -> dict:
    try:
        return json.loads(await request.body())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"request body is not valid JSON: {exc}") from exc


def create_app(project_dir: str | Path, dev: bool = False, static_dir: Path | None = None) -> FastAPI:
    store = ProjectStore(project_dir)
    app = FastAPI(title="crf", docs_url=None, redoc_url=None)
    write_mutex = threading.Lock()

    if dev:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(ValidationError)
    async def _on_validation(request, exc: ValidationError):
        code = exc.issues[0].rule if exc.issues else "validation"
        return _error(400, code, str(exc), errors=[i.to_dict() for i in exc.issues])

    @app.exception_handler(NotFoundError)
    async def _on_not_found(request, exc: NotFoundError):
        return _error(404, "not-found", str(exc))

    @app.exception_handler(LockError)
    async def _on_lock(request, exc: LockError):
        return _error(409, "lock-conflict", str(exc))

    @app.exception_handler(StorageError)
    async def _on_storage(request, exc: StorageError):
        return _error(500, "io-error", str(exc))

    @app.get("/api/catalog")
    async def get_catalog():
        return _ok(store.load_catalog().to_dict())

    @app.get("/api/project")
    async def get_project():
        return _ok(store.load().to_dict())

    @app.get("/api/assessments/{use_case_id}")
    async def get_assessments(use_case_id: str):
        project = store.load()
        store.load_catalog().use_case(use_case_id)  # 404 on unknown id
        items = project.assessments.get(use_case_id, [])
        return _ok({"use_case_id": use_case_id, "assessments": [a.to_dict() for a in items]})

    @app.put("/api/assessments/{use_case_id}")
    async def put_assessments(use_case_id: str, request: Request):
        doc = await _body(request)
        items = doc.get("assessments", doc) if isinstance(doc, dict) else doc
        if not isinstance(items, list):
            raise ValidationError("expected a list of assessments")
        parsed = [EnablerAssessment.from_dict(item) for item in items]
        with write_mutex:
            project = store.load()
            catalog = store.load_catalog()
            catalog.use_case(use_case_id)  # 404 on unknown id
            project.assessments[use_case_id] = parsed
            store.save(project)
        sheet = reporting.score_sheet(use_case_id, parsed, catalog)
        return _ok(sheet.to_dict())

    @app.get("/api/reports/usecase/{use_case_id}")
    async def report_use_case(use_case_id: str):
        project = store.load()
        catalog = store.load_catalog()
        return _ok(reporting.use_case_report(project, catalog, use_case_id))

    @app.get("/api/reports/service/{service_id}")
    async def report_service(service_id: str):
        project = store.load()
        catalog = store.load_catalog()
        return _ok(reporting.service_report(project, catalog, service_id))

    @app.get("/api/reports/overall")
    async def report_overall():
        project = store.load()
        catalog = store.load_catalog()
        return _ok(reporting.overall_report(project, catalog))

    @app.post("/api/whatif")
    async def whatif(request: Request):
        doc = await _body(request)
        use_case_id = doc.get("use_case_id")
        if not use_case_id:
            raise ValidationError("whatif request requires use_case_id")
        overrides = [Override.from_dict(o) for o in doc.get("overrides", [])]
        project = store.load()
        catalog = store.load_catalog()
        report = reporting.use_case_report(project, catalog, use_case_id, overrides=overrides)
        report["overrides_applied"] = len(overrides)
        return _ok(report)

    @app.get("/api/snapshots")
    async def list_snapshots():
        snaps = store.list_snapshots()
        return _ok(
            {"snapshots": [{"id": s.id, "label": s.label, "timestamp": s.timestamp} for s in snaps]}
        )

    @app.post("/api/snapshots")
    async def create_snapshot(request: Request):
        doc = await _body(request)
        label = doc.get("label")
        if not label:
            raise ValidationError("snapshot request requires a label")
        with write_mutex:
            snap = store.take_snapshot(label)
        return _ok({"id": snap.id, "label": snap.label, "timestamp": snap.timestamp}, status=201)

    @app.get("/api/snapshots/diff")
    async def diff_snapshots(a: str, b: str):
        return _ok(store.diff_snapshots(a, b).to_dict())

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="dashboard")

    return app
