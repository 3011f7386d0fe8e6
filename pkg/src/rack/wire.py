"""Canonical JSON payloads shared by the HTTP service and the CLI.

The CLI's --json output must be byte-identical to the service responses, so
both go through the same builders and the same dump settings.
"""

from __future__ import annotations

import json
from typing import Iterable

from rack.indexstore import KeywordApiIndex
from rack.reformulate import Suggestion
from rack.snippets import SnippetResult


def _round2(value: float) -> float:
    return round(value, 2)


def reformulate_payload(suggestion: Suggestion) -> dict:
    return {
        "keywords": list(suggestion.query.keywords),
        "candidates": [
            {
                "api": c.api,
                "kac": _round2(c.kac),
                "kkc": _round2(c.kkc),
                "relevance": _round2(c.relevance),
                "kac_raw": c.kac_raw,
                "kkc_raw": c.kkc_raw,
                "kac_full": c.kac,
                "kkc_full": c.kkc,
                "relevance_full": c.relevance,
            }
            for c in suggestion.candidates
        ],
    }


def search_payload(results: Iterable[SnippetResult], notice: str | None = None) -> dict:
    rows = []
    for rank, result in enumerate(results, start=1):
        snippet = result.snippet
        hit = snippet.file
        rows.append(
            {
                "rank": rank,
                "combined": _round2(result.combined),
                "similarity": _round2(result.similarity),
                "combined_full": result.combined,
                "similarity_full": result.similarity,
                "repo": hit.repo if hit else "",
                "path": hit.path if hit else "",
                "host_score": hit.host_score if hit else 0.0,
                "host_rank": hit.host_rank if hit else 0,
                "name": snippet.name,
                "start_line": snippet.start_line,
                "end_line": snippet.end_line,
                "matched_keywords": sorted(result.matched_keywords),
                "body": snippet.body,
            }
        )
    payload: dict = {"results": rows}
    if notice is not None:
        payload["notice"] = notice
    return payload


def health_payload(index: KeywordApiIndex) -> dict:
    return {
        "status": "ok",
        "index_meta": {
            "records": index.meta.records,
            "source_digest": index.meta.source_digest,
            "built_at": index.meta.built_at,
        },
    }


def error_payload(code: str, message: str, **extra) -> dict:
    payload = {"code": code, "message": message}
    payload.update(extra)
    return payload


def to_json_bytes(payload: dict) -> bytes:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False).encode("utf-8")
