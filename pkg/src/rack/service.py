"""HTTP service exposing reformulation and snippet search under /v1.

All shared state (the keyword-API index, the local corpus index) is
immutable after startup, so request handling is stateless and safe under
concurrency.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from rack import corpus as corpus_mod
from rack import indexstore, snippets, wire
from rack.corpus import CorpusError, LocalCorpusIndex
from rack.reformulate import DEFAULT_TOP, EmptyQueryError, make_query, suggest


@dataclass
class ServiceConfig:
    index_path: str | Path | None = None
    backend: Literal["local", "remote"] = "local"
    corpus_dir: str | Path | None = None
    orgs: Sequence[str] = corpus_mod.DEFAULT_ORGS
    host: str = "127.0.0.1"
    port: int = 8744
    reformulate_budget: float = 10.0
    search_budget: float = 2.0
    host_weight: float = 0.5
    enforce_budgets: bool = False
    static_dir: str | Path | None = None
    extra: dict = field(default_factory=dict)


def load_config(path: str | Path) -> ServiceConfig:
    """Parse the `key = value` config format (one pair per line, # comments)."""
    config = ServiceConfig()
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip().replace("-", "_"), value.strip()
        if key in ("index_path", "corpus_dir", "static_dir"):
            setattr(config, key, value)
        elif key == "backend":
            if value not in ("local", "remote"):
                raise ValueError(f"{path}:{lineno}: backend must be local or remote")
            config.backend = value
        elif key == "orgs":
            config.orgs = [o.strip() for o in value.split(",") if o.strip()]
        elif key == "host":
            config.host = value
        elif key == "port":
            config.port = int(value)
        elif key in ("reformulate_budget", "search_budget", "host_weight"):
            setattr(config, key, float(value))
        elif key == "enforce_budgets":
            config.enforce_budgets = value.lower() in ("1", "true", "yes")
        else:
            config.extra[key] = value
    return config


class ReformulateRequest(BaseModel):
    query: str
    top: int = Field(default=DEFAULT_TOP, ge=1)


class SearchRequest(BaseModel):
    query: str
    apis: list[str]
    mode: Literal["top1", "topk"] = "topk"
    k: int = Field(default=DEFAULT_TOP, ge=1)


def _json(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=wire.to_json_bytes(payload),
        status_code=status_code,
        media_type="application/json",
    )


def create_app(
    config: ServiceConfig,
    index: indexstore.KeywordApiIndex | None = None,
    corpus_index: LocalCorpusIndex | None = None,
    load_at_startup: bool = True,
) -> FastAPI:
    """Build the service; pass `index` explicitly to skip file loading."""
    app = FastAPI(title="rack", version="1")

    if index is None and load_at_startup and config.index_path is not None:
        index = indexstore.load(config.index_path)
    if (
        corpus_index is None
        and config.backend == "local"
        and config.corpus_dir is not None
    ):
        corpus_index = LocalCorpusIndex(config.corpus_dir)

    app.state.index = index
    app.state.corpus_index = corpus_index
    app.state.config = config

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content=wire.error_payload("BAD_REQUEST", "malformed request body"),
        )

    @app.get("/v1/health")
    def health() -> Response:
        if app.state.index is None:
            return _json(
                wire.error_payload("NO_INDEX", "index not loaded") | {"status": "loading"},
                status_code=503,
            )
        return _json(wire.health_payload(app.state.index))

    @app.post("/v1/reformulate")
    def reformulate(body: ReformulateRequest) -> Response:
        if app.state.index is None:
            return _json(wire.error_payload("NO_INDEX", "index not loaded"), 503)
        started = time.perf_counter()
        try:
            suggestion = suggest(app.state.index, body.query, top=body.top)
        except EmptyQueryError as exc:
            return _json(wire.error_payload("EMPTY_QUERY", str(exc)), 422)
        elapsed = time.perf_counter() - started
        if config.enforce_budgets and elapsed > config.reformulate_budget:
            return _json(
                wire.error_payload("BUDGET", f"reformulation took {elapsed:.2f}s"), 503
            )
        return _json(wire.reformulate_payload(suggestion))

    @app.post("/v1/search")
    def search(body: SearchRequest) -> Response:
        if app.state.index is None:
            return _json(wire.error_payload("NO_INDEX", "index not loaded"), 503)
        apis = [a for a in body.apis if a.strip()]
        if not apis:
            return _json(wire.error_payload("NO_APIS", "select at least one API"), 422)
        k = 1 if body.mode == "top1" else body.k
        started = time.perf_counter()
        try:
            query = make_query(body.query)
        except EmptyQueryError as exc:
            return _json(wire.error_payload("EMPTY_QUERY", str(exc)), 422)
        try:
            if config.backend == "local":
                if app.state.corpus_index is None:
                    return _json(
                        wire.error_payload("NO_CORPUS", "local corpus not configured"), 503
                    )
                hits = corpus_mod.local_search(app.state.corpus_index, apis, limit=max(k, 10))
            else:
                hits = corpus_mod.GitHubCodeSearch(orgs=config.orgs).search(
                    apis, limit=max(k, 10)
                )
        except CorpusError as exc:
            return _json(wire.error_payload(exc.code, str(exc)), 502)
        results = snippets.rank_snippets(
            hits, query, apis, k=k, host_weight=config.host_weight
        )
        elapsed = time.perf_counter() - started
        if config.enforce_budgets and elapsed > config.search_budget:
            return _json(wire.error_payload("BUDGET", f"search took {elapsed:.2f}s"), 503)
        notice = snippets.NO_SNIPPETS_NOTICE if not results else None
        return _json(wire.search_payload(results, notice))

    if config.static_dir is not None:
        app.mount("/", StaticFiles(directory=str(config.static_dir), html=True))

    return app
