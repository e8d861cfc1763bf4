"""HTTP service exposing /generate, /similarity and /nli.

Responses are plain JSON; malformed requests get 400, and requests that
arrive before the models finish loading get 503.
"""

from __future__ import annotations

import threading
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .config import FrontendConfig
from .models import RELATIONS, ModelStack, build_models


class GenerateRequest(BaseModel):
    event: str = Field(min_length=1)
    relation: str
    k: int = Field(default=6, ge=1)


class PairRequest(BaseModel):
    a: str = Field(min_length=1)
    b: str = Field(min_length=1)


def create_app(config: FrontendConfig | None = None, recorder=None) -> FastAPI:
    config = config or FrontendConfig()
    state: dict[str, ModelStack | None] = {"models": None}
    lock = threading.Lock()

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        with lock:
            state["models"] = build_models(config)
        yield

    app = FastAPI(title="story-frontend", lifespan=lifespan)

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    def models() -> ModelStack:
        stack = state["models"]
        if stack is None:
            raise HTTPException(status_code=503, detail="models still loading")
        return stack

    @app.post("/generate")
    def generate(request: GenerateRequest):
        if request.relation not in RELATIONS:
            raise HTTPException(status_code=400, detail=f"unknown relation {request.relation!r}")
        beam = models().generator.generate(request.event, request.relation, request.k)
        if recorder is not None:
            recorder.generation(request.event, request.relation, beam)
        return beam

    @app.post("/similarity")
    def similarity(request: PairRequest):
        score = models().embedder.similarity(request.a, request.b)
        if recorder is not None:
            recorder.similarity(request.a, request.b, score)
        return {"score": score}

    @app.post("/nli")
    def nli(request: PairRequest):
        verdict = models().nli.classify(request.a, request.b)
        if recorder is not None:
            recorder.nli(request.a, request.b, verdict)
        return verdict

    @app.get("/health")
    def health():
        return {"ready": state["models"] is not None}

    return app


def serve(config: FrontendConfig | None = None) -> None:
    import uvicorn

    config = config or FrontendConfig()
    uvicorn.run(create_app(config), host="127.0.0.1", port=config.port, log_level="warning")
