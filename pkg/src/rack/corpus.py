"""Code-corpus search backends.

Both backends satisfy the same contract: given API class names, return
ranked FileHits with full file contents and a host relevance score. The
local backend indexes a directory tree of .java files and exists so the
whole pipeline runs offline; the remote backend speaks the GitHub code
search REST protocol.
"""

from __future__ import annotations

import base64
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import httpx

from rack.kernels import find_identifiers

DEFAULT_ORGS = ("apache", "eclipse", "google", "facebook")
TOKEN_ENV_VAR = "RACK_CODE_TOKEN"
GITHUB_API = "https://api.github.com"
FETCH_WORKERS = 8


@dataclass(frozen=True)
class FileHit:
    repo: str
    path: str
    content: str
    host_score: float
    host_rank: int


class CorpusError(RuntimeError):
    """Base for backend failures; `code` is the machine-readable reason."""

    code = "BACKEND"


class AuthError(CorpusError):
    code = "AUTH"


class RateLimitError(CorpusError):
    code = "RATE_LIMIT"

    def __init__(self, message: str, retry_after: float | None = None) -> None:
        super().__init__(message)
        self.retry_after = retry_after


class NetworkError(CorpusError):
    code = "NETWORK"


class LocalCorpusIndex:
    """Inverted token index over the .java files beneath a directory."""

    def __init__(self, corpus_dir: str | Path) -> None:
        self.root = Path(corpus_dir)
        self.files: dict[str, str] = {}
        self.postings: dict[str, set[str]] = {}
        for path in sorted(self.root.rglob("*.java")):
            rel = path.relative_to(self.root).as_posix()
            content = path.read_text("utf-8", errors="replace")
            self.files[rel] = content
            for token in set(find_identifiers(content)):
                self.postings.setdefault(token, set()).add(rel)

    def __len__(self) -> int:
        return len(self.files)


def local_index(corpus_dir: str | Path) -> LocalCorpusIndex:
    return LocalCorpusIndex(corpus_dir)


def local_search(
    index: LocalCorpusIndex, api_terms: Sequence[str], limit: int = 10
) -> list[FileHit]:
    """Score = fraction of distinct api_terms present as exact tokens.

    Zero-score files are excluded; ties break by ascending path.
    """
    if not api_terms:
        raise ValueError("api_terms must be non-empty")
    terms = list(dict.fromkeys(api_terms))
    scores: dict[str, int] = {}
    for term in terms:
        for path in index.postings.get(term, ()):
            scores[path] = scores.get(path, 0) + 1
    ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
    return [
        FileHit(
            repo="local",
            path=path,
            content=index.files[path],
            host_score=matched / len(terms),
            host_rank=rank,
        )
        for rank, (path, matched) in enumerate(ranked[:limit], start=1)
    ]


class GitHubCodeSearch:
    """Minimal GitHub code-search client with typed failure modes.

    Pass `client` to replay recorded responses in tests; by default an
    httpx.Client with the token from $RACK_CODE_TOKEN is used.
    """

    def __init__(
        self,
        token: str | None = None,
        orgs: Sequence[str] = DEFAULT_ORGS,
        client: httpx.Client | None = None,
        base_url: str = GITHUB_API,
        fetch_workers: int = FETCH_WORKERS,
    ) -> None:
        self.token = token if token is not None else os.environ.get(TOKEN_ENV_VAR)
        self.orgs = list(orgs)
        self.base_url = base_url.rstrip("/")
        self.fetch_workers = fetch_workers
        self._client = client

    def _headers(self) -> dict[str, str]:
        headers = {"Accept": "application/vnd.github+json"}
        if self.token:
            headers["Authorization"] = f"Bearer {self.token}"
        return headers

    def _get(self, client: httpx.Client, url: str, **kwargs) -> httpx.Response:
        try:
            response = client.get(url, headers=self._headers(), **kwargs)
        except httpx.TimeoutException as exc:
            raise NetworkError(f"timeout talking to code search host: {exc}") from exc
        except httpx.HTTPError as exc:
            raise NetworkError(f"transport failure: {exc}") from exc
        if response.status_code == 401:
            raise AuthError("code search host rejected credentials")
        if response.status_code in (403, 429) and (
            response.headers.get("X-RateLimit-Remaining") == "0"
            or "Retry-After" in response.headers
        ):
            raise RateLimitError(
                "code search rate limit exhausted",
                retry_after=_retry_after_seconds(response),
            )
        if response.status_code >= 400:
            raise CorpusError(f"code search host returned {response.status_code}")
        return response

    def search(self, api_terms: Sequence[str], limit: int = 10) -> list[FileHit]:
        if not api_terms:
            raise ValueError("api_terms must be non-empty")
        if not self.token:
            raise AuthError(f"no code search token: set {TOKEN_ENV_VAR}")

        query = " ".join(api_terms)
        for org in self.orgs:
            query += f" org:{org}"
        query += " language:java"

        client = self._client or httpx.Client(timeout=10.0)
        owns_client = self._client is None
        try:
            response = self._get(
                client,
                f"{self.base_url}/search/code",
                params={"q": query, "per_page": limit},
            )
            items = response.json().get("items", [])[:limit]

            def fetch(ranked_item: tuple[int, dict]) -> FileHit:
                rank, item = ranked_item
                detail = self._get(client, item["url"]).json()
                content = detail.get("content", "")
                if detail.get("encoding") == "base64":
                    content = base64.b64decode(content).decode("utf-8", errors="replace")
                score = item.get("score")
                return FileHit(
                    repo=item.get("repository", {}).get("full_name", ""),
                    path=item.get("path", ""),
                    content=content,
                    host_score=float(score) if score is not None else 1.0 / rank,
                    host_rank=rank,
                )

            with ThreadPoolExecutor(max_workers=self.fetch_workers) as pool:
                hits = list(pool.map(fetch, enumerate(items, start=1)))
            return hits
        finally:
            if owns_client:
                client.close()


def _retry_after_seconds(response: httpx.Response) -> float | None:
    retry_after = response.headers.get("Retry-After")
    if retry_after is not None:
        try:
            return float(retry_after)
        except ValueError:
            return None
    reset = response.headers.get("X-RateLimit-Reset")
    if reset is not None:
        try:
            return max(0.0, float(reset) - time.time())
        except ValueError:
            return None
    return None


def remote_search(
    api_terms: Sequence[str],
    orgs: Sequence[str] = DEFAULT_ORGS,
    limit: int = 10,
    token: str | None = None,
    client: httpx.Client | None = None,
) -> list[FileHit]:
    return GitHubCodeSearch(token=token, orgs=orgs, client=client).search(api_terms, limit)
