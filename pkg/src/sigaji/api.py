"""HTTP facade over the store, the engine and the reports.

JSON bodies mirror the persistence field names exactly; amounts are bare
integers.  Every mutation is applied to a validated copy of the store,
persisted to the document, and only then swapped in, so a failed request
(validation or I/O) leaves both the live store and the document untouched.

Error mapping is fixed: validation -> 400, not_found -> 404,
conflict / referential_conflict -> 409, anything else -> 500.
"""

from __future__ import annotations

import json
import threading

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from . import engine, reports, schema
from .domain import Dosen
from .errors import ConflictError, NotFoundError, PayrollError, ValidationError
from .store import Store, load_store, save_store

STATUS_BY_CODE = {
    "validation": 400,
    "not_found": 404,
    "conflict": 409,
    "referential_conflict": 409,
    "internal": 500,
}

DOSEN_FIELDS = ("nii", "nama_dosen", "golongan", "jab_fa", "jab_str", "jab_khs", "pendidikan")


def _row_dict(spec: schema.TableSpec, row) -> dict:
    return {f.name: getattr(row, f.name) for f in spec.fields}


def _master_spec(table: str) -> schema.TableSpec:
    spec = schema.MASTER_TABLES.get(table)
    if spec is None:
        raise NotFoundError(f"unknown table {table!r}")
    return spec


def _parse_id(raw: str, label: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"{label} must be an integer, got {raw!r}") from None


async def _json_body(request: Request) -> dict:
    try:
        payload = json.loads(await request.body())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"request body is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValidationError("request body must be a JSON object")
    return payload


def _master_body(spec: schema.TableSpec, payload: dict) -> tuple[str, object]:
    name_field = spec.fields[1].name
    tarif_field = spec.fields[2].name
    expected = {name_field, tarif_field}
    if set(payload) != expected:
        raise ValidationError(
            f"{spec.name} body must hold exactly the fields {sorted(expected)}, "
            f"got {sorted(payload)}"
        )
    return payload[name_field], payload[tarif_field]


def _dosen_from_body(payload: dict, nii: str | None = None) -> Dosen:
    body = dict(payload)
    if nii is not None and "nii" not in body:
        body["nii"] = nii
    if set(body) != set(DOSEN_FIELDS):
        raise ValidationError(
            f"dosen body must hold exactly the fields {list(DOSEN_FIELDS)}, "
            f"got {sorted(payload)}"
        )
    if nii is not None and body["nii"] != nii:
        raise ValidationError(f"body nii {body['nii']!r} does not match path nii {nii!r}")
    if not isinstance(body["nii"], str) or not isinstance(body["nama_dosen"], str):
        raise ValidationError("nii and nama_dosen must be text")
    return Dosen(**{name: body[name] for name in DOSEN_FIELDS})


def create_app(db_path: str | None = None, paper_compat: bool = False,
               store: Store | None = None) -> FastAPI:
    """Build the service around a loaded store.

    When ``store`` is omitted the document at ``db_path`` is loaded (and
    must exist).  When ``db_path`` is omitted mutations are kept in memory
    only (test use).
    """
    if store is None:
        if db_path is None:
            store = Store(paper_compat=paper_compat)
        else:
            store = load_store(db_path, paper_compat)

    app = FastAPI(title="sigaji", docs_url=None, redoc_url=None)
    app.state.store = store
    app.state.db_path = db_path
    app.state.lock = threading.Lock()

    @app.exception_handler(PayrollError)
    async def payroll_error(request: Request, exc: PayrollError) -> JSONResponse:
        body = {"code": exc.code, "message": exc.message}
        if exc.details:
            body["details"] = exc.details
        return JSONResponse(status_code=STATUS_BY_CODE[exc.code], content=body)

    def mutate(fn):
        """Run fn on a copy, persist, then swap the copy in."""
        with app.state.lock:
            working = app.state.store.copy()
            result = fn(working)
            if app.state.db_path is not None:
                save_store(working, app.state.db_path)
            app.state.store = working
            return result

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok"}

    # Specific paths (dosen, slips, reports) are registered before the
    # generic /api/{table} master routes; route matching is first-match.

    # -- dosen ---------------------------------------------------------------

    @app.get("/api/dosen")
    async def list_dosen() -> list[dict]:
        return [_row_dict(schema.DOSEN, row) for row in app.state.store.list_dosen()]

    @app.post("/api/dosen", status_code=201)
    async def insert_dosen(request: Request) -> dict:
        dosen = _dosen_from_body(await _json_body(request))

        def do(working: Store) -> dict:
            if dosen.nii in working.dosen:
                raise ConflictError(f"dosen nii {dosen.nii!r} already exists")
            working.upsert_dosen(dosen)
            return _row_dict(schema.DOSEN, working.get_dosen(dosen.nii))

        return mutate(do)

    @app.get("/api/dosen/{nii}/profil")
    async def dosen_profil(nii: str) -> dict:
        profil = engine.resolve_profil(app.state.store, nii)
        return {
            "nii": profil.nii,
            "nama_dosen": profil.nama_dosen,
            "gapok": profil.gapok,
            "tunj_fa": profil.tunj_fa,
            "tunj_str": profil.tunj_str,
            "tunj_khs": profil.tunj_khs,
            "tarif_mgjr": profil.tarif_mgjr,
        }

    @app.get("/api/dosen/{nii}")
    async def get_dosen(nii: str) -> dict:
        return _row_dict(schema.DOSEN, app.state.store.get_dosen(nii))

    @app.put("/api/dosen/{nii}")
    async def upsert_dosen(nii: str, request: Request) -> dict:
        dosen = _dosen_from_body(await _json_body(request), nii=nii)

        def do(working: Store) -> dict:
            working.upsert_dosen(dosen)
            return _row_dict(schema.DOSEN, working.get_dosen(nii))

        return mutate(do)

    @app.delete("/api/dosen/{nii}")
    async def delete_dosen(nii: str) -> dict:
        def do(working: Store) -> dict:
            working.delete_dosen(nii)
            return {"deleted": nii}

        return mutate(do)

    # -- slips ----------------------------------------------------------------

    @app.get("/api/slips")
    async def list_slips(periode: str | None = None) -> list[dict]:
        return [_row_dict(schema.GAJI, slip)
                for slip in app.state.store.list_slips(periode)]

    @app.post("/api/slips", status_code=201)
    async def create_slip(request: Request) -> dict:
        gaji_input = engine.GajiInput.from_raw(await _json_body(request))

        def do(working: Store) -> dict:
            slip = engine.create_slip(working, gaji_input)
            return _row_dict(schema.GAJI, slip)

        return mutate(do)

    @app.post("/api/slips/preview")
    async def preview_slip(request: Request) -> dict:
        gaji_input = engine.GajiInput.from_raw(await _json_body(request))
        profil = engine.resolve_profil(app.state.store, gaji_input.nii)
        breakdown = engine.compute_breakdown(profil, gaji_input,
                                             app.state.store.paper_compat)
        return breakdown.as_dict()

    @app.get("/api/slips/{no_slip}")
    async def get_slip(no_slip: str) -> dict:
        key = _parse_id(no_slip, "no_slip")
        return _row_dict(schema.GAJI, app.state.store.get_slip(key))

    # -- reports ----------------------------------------------------------------

    @app.get("/api/reports/{name}")
    async def report(name: str, periode: str | None = None,
                     no_slip: str | None = None, format: str = "text") -> Response:
        if format not in ("text", "csv"):
            raise ValidationError(f"format must be 'text' or 'csv', got {format!r}")
        key = _parse_id(no_slip, "no_slip") if no_slip is not None else None
        built = reports.build(app.state.store, name, periode=periode, no_slip=key)
        if format == "csv":
            return Response(
                content=reports.to_csv(built),
                media_type="text/csv; charset=utf-8",
                headers={"Content-Disposition": f'attachment; filename="{name}.csv"'},
            )
        return Response(content=reports.render_text(built),
                        media_type="text/plain; charset=utf-8")

    # -- master tables (generic, registered last) ------------------------------

    @app.get("/api/{table}")
    async def list_master(table: str) -> list[dict]:
        spec = _master_spec(table)
        return [_row_dict(spec, row) for row in app.state.store.list_master(table)]

    @app.post("/api/{table}", status_code=201)
    async def insert_master(table: str, request: Request) -> dict:
        spec = _master_spec(table)
        nama, tarif = _master_body(spec, await _json_body(request))

        def do(working: Store) -> dict:
            new_id = working.insert_master(table, nama, tarif)
            return _row_dict(spec, working.get_master(table, new_id))

        return mutate(do)

    @app.get("/api/{table}/{row_id}")
    async def get_master(table: str, row_id: str) -> dict:
        spec = _master_spec(table)
        return _row_dict(spec, app.state.store.get_master(table, _parse_id(row_id, spec.pk)))

    @app.put("/api/{table}/{row_id}")
    async def update_master(table: str, row_id: str, request: Request) -> dict:
        spec = _master_spec(table)
        key = _parse_id(row_id, spec.pk)
        nama, tarif = _master_body(spec, await _json_body(request))

        def do(working: Store) -> dict:
            working.update_master(table, key, nama, tarif)
            return _row_dict(spec, working.get_master(table, key))

        return mutate(do)

    @app.delete("/api/{table}/{row_id}")
    async def delete_master(table: str, row_id: str) -> dict:
        spec = _master_spec(table)
        key = _parse_id(row_id, spec.pk)

        def do(working: Store) -> dict:
            working.delete_master(table, key)
            return {"deleted": key}

        return mutate(do)

    return app


def serve(db_path: str, host: str = "127.0.0.1", port: int = 8000,
          paper_compat: bool = False, static_dir: str | None = None) -> None:
    """Load the store document and serve until shutdown."""
    import uvicorn

    app = create_app(db_path=db_path, paper_compat=paper_compat)
    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    uvicorn.run(app, host=host, port=port, log_level="info")
