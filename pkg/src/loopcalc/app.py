"""FastAPI service exposing the decomposition engine.

Run with `uvicorn loopcalc.app:app`.  Every endpoint wraps the same
handlers the CLI uses; domain and usage errors come back as HTTP 400
with the standard error object.
"""

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .api import (
    DecomposeRequest,
    EquivalentRequest,
    VerifyRequest,
    handle_decompose,
    handle_equivalent,
    handle_verify,
)
from .errors import LoopcalcError

app = FastAPI(title="loopcalc")


@app.exception_handler(LoopcalcError)
async def _loopcalc_error(request, exc):
    return JSONResponse(
        status_code=400,
        content={"error": {"code": exc.code, "message": str(exc)}},
    )


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/decompose")
def decompose(request: DecomposeRequest):
    return handle_decompose(request.spec, request.cap, request.emit)


@app.post("/equivalent")
def equivalent(request: EquivalentRequest):
    return handle_equivalent(request.a, request.b)


@app.post("/verify")
def verify(request: VerifyRequest):
    return handle_verify(request.suite, request.seed)
