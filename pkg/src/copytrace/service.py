"""HTTP facade over the corpus, comparison and report modules.

JSON API plus optional static serving of the web UI bundle.  Handlers
are stateless: every response is a function of the request and the
current corpus snapshot, and a 2xx mutation response means the index
file already reflects the change (corpus writes are durable before they
return).
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import report as report_mod
from . import similarity
from .corpus import Corpus
from .errors import CopytraceError, InvalidEncoding, UnknownDocument

DEFAULT_MAX_UPLOAD = 10 * 1024 * 1024

_HTTP_STATUS = {
    "empty_document": 400,
    "invalid_encoding": 400,
    "missing_name": 400,
    "payload_too_large": 400,
    "unknown_document": 404,
    "storage_failure": 500,
}


def _error_response(code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=_HTTP_STATUS.get(code, 500),
        content={"code": code, "message": message},
    )


class ComparePair(BaseModel):
    a: int
    b: int


def create_app(
    corpus: Corpus,
    static_dir: str | Path | None = None,
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD,
) -> FastAPI:
    app = FastAPI(title="copytrace", docs_url=None, redoc_url=None)

    @app.exception_handler(CopytraceError)
    async def _domain_error(request: Request, exc: CopytraceError):
        return _error_response(exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def _invalid_request(request: Request, exc: RequestValidationError):
        # keep the error vocabulary closed: malformed requests use the
        # same {code, message} shape as domain errors
        return JSONResponse(
            status_code=400,
            content={"code": "invalid_request", "message": str(exc.errors()[:1])},
        )

    @app.post("/api/documents", status_code=201)
    async def upload_document(request: Request, name: str | None = None):
        content_type = request.headers.get("content-type", "")
        if content_type.startswith("multipart/form-data"):
            form = await request.form()
            upload = form.get("file")
            if upload is None or isinstance(upload, str):
                return _error_response("empty_document", "multipart body needs a 'file' part")
            data = await upload.read()
            doc_name = form.get("name") or name or Path(upload.filename or "").stem
        else:
            data = await request.body()
            doc_name = name
        if len(data) > max_upload_bytes:
            return _error_response(
                "payload_too_large", f"upload exceeds {max_upload_bytes} bytes"
            )
        if not doc_name:
            return _error_response("missing_name", "document name is required")
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidEncoding("body is not valid UTF-8") from exc
        doc_id = corpus.ingest(doc_name, text)
        info = corpus.get_document(doc_id)
        return JSONResponse(
            status_code=201,
            content={
                "id": doc_id,
                "name": info.name,
                "sentence_count": info.segmented.sentence_count,
            },
        )

    @app.get("/api/documents")
    async def list_documents():
        payload = report_mod.render_document_list_json(corpus.list_documents())
        return Response(content=payload, media_type="application/json")

    @app.get("/api/documents/{doc_id}/xml")
    async def document_xml(doc_id: int):
        return Response(content=corpus.export_xml(doc_id), media_type="application/xml")

    @app.delete("/api/documents/{doc_id}", status_code=204)
    async def delete_document(doc_id: int):
        if not corpus.remove_document(doc_id):
            raise UnknownDocument(f"no document with id {doc_id}")
        return Response(status_code=204)

    @app.post("/api/compare")
    async def compare_documents(pair: ComparePair):
        snap = corpus.snapshot()
        r = similarity.compare(pair.a, pair.b, snap)
        return Response(content=report_mod.render_json(r), media_type="application/json")

    @app.get("/api/compare/{a}/{b}/html")
    async def compare_html(a: int, b: int):
        snap = corpus.snapshot()
        r = similarity.compare(a, b, snap)
        return Response(content=report_mod.render_html(r, snap), media_type="text/html")

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def serve(
    corpus: Corpus,
    listen: str = "127.0.0.1:8080",
    static_dir: str | None = None,
) -> None:
    """Run the API under uvicorn until interrupted."""
    import uvicorn

    host, _, port = listen.rpartition(":")
    app = create_app(corpus, static_dir=static_dir)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port), log_level="info")
