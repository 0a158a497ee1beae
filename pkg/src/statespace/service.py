"""Stateless HTTP facade over the operation layer.

POST /v1/{validate,eig,distance,angle,mix,project,leaf,measure,decohere,
tomo,hierarchy,scene} with a JSON body of text payloads in the library file
formats; GET /v1/health.  Responses reuse the CLI's canonical JSON encoder
byte for byte.  Errors: 400 malformed input, 422 domain error (structured
{code, message}), 500 internal.  Requests are capped at 1 MiB.
"""

import json
import os

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import ops
from .errors import FormatError, StatespaceError

MAX_BODY_BYTES = 1 << 20


def _error_response(status, code, message):
    return Response(
        content=json.dumps({"code": code, "message": message}) + "\n",
        status_code=status,
        media_type="application/json",
    )


def create_app(cors_origin=None):
    app = FastAPI(title="statespace", docs_url=None, redoc_url=None)
    origin = cors_origin or os.environ.get("STATESPACE_CORS_ORIGIN", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin],
        allow_methods=["GET", "POST", "OPTIONS"],
        allow_headers=["*"],
    )

    @app.get("/v1/health")
    def health():
        return Response(
            content=json.dumps({"status": "ok"}) + "\n",
            media_type="application/json",
        )

    def make_handler(name, fn):
        async def handler(request: Request):
            raw = await request.body()
            if len(raw) > MAX_BODY_BYTES:
                return _error_response(400, "TooLarge", "request exceeds 1 MiB")
            try:
                body = json.loads(raw.decode() or "{}")
            except (json.JSONDecodeError, UnicodeDecodeError) as e:
                return _error_response(400, "MalformedJson", str(e))
            if not isinstance(body, dict):
                return _error_response(400, "MalformedJson", "body must be an object")
            try:
                payload = fn(body)
            except FormatError as e:
                return _error_response(400, e.code, str(e))
            except StatespaceError as e:
                return _error_response(422, e.code, str(e))
            except (TypeError, ValueError) as e:
                return _error_response(400, "MalformedInput", str(e))
            return Response(
                content=ops.payload_bytes(payload),
                media_type="application/json",
            )

        handler.__name__ = f"op_{name}"
        return handler

    for name, fn in ops.OPERATIONS.items():
        app.post(f"/v1/{name}")(make_handler(name, fn))
    return app


def serve(host="127.0.0.1", port=8077, cors_origin=None):
    import uvicorn

    uvicorn.run(create_app(cors_origin), host=host, port=port, log_level="warning")
