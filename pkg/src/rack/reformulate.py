"""Query-to-API reformulation.

Two heuristics score candidate API classes against the query's keyword set:

* KAC (keyword-API co-occurrence): how often an API co-occurs with the
  query's keywords across mined Q&A pairs, summed over keywords.
* KKC (keyword-keyword coherence): the fraction of keyword pairs for which
  the API independently ranks among both keywords' top associations.

Each is max-normalized over the candidate set; overall relevance is the
max-normalized mean of the two. The top candidate therefore always scores
exactly 1.0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from rack.indexstore import KeywordApiIndex
from rack.textprep import extract_keywords

DEFAULT_TOP = 10
DEFAULT_COHERENCE_WINDOW = 10


class EmptyQueryError(ValueError):
    """Query reduced to zero keywords after preprocessing."""


class NoWorkingContextError(ValueError):
    """No comment block found at or above the requested line."""


@dataclass(frozen=True)
class Query:
    raw: str
    keywords: tuple[str, ...]


@dataclass(frozen=True)
class ApiCandidate:
    api: str
    kac_raw: int
    kac: float
    kkc_raw: float
    kkc: float
    relevance: float


@dataclass(frozen=True)
class Suggestion:
    query: Query
    candidates: tuple[ApiCandidate, ...]


def make_query(raw: str, stoplist: Iterable[str] | None = None) -> Query:
    keywords = extract_keywords(raw, stoplist)
    if not keywords:
        raise EmptyQueryError(f"no keywords survive preprocessing of {raw!r}")
    return Query(raw=raw, keywords=tuple(keywords))


def kac_scores(
    index: KeywordApiIndex, keywords: Iterable[str]
) -> dict[str, tuple[int, float]]:
    """Summed co-occurrence per API over the query keywords, max-normalized.

    The candidate set is every API with a raw sum of at least 1.
    """
    raw: dict[str, int] = {}
    for keyword in keywords:
        for api, count in index.lookup(keyword).items():
            raw[api] = raw.get(api, 0) + count
    if not raw:
        return {}
    top = max(raw.values())
    return {api: (value, value / top) for api, value in raw.items()}


def kkc_scores(
    index: KeywordApiIndex,
    keywords: Iterable[str],
    candidates: Iterable[str],
    window: int = DEFAULT_COHERENCE_WINDOW,
) -> dict[str, tuple[float, float]]:
    """Coherence per candidate API, max-normalized.

    An API is coherent for a keyword pair when it appears in both keywords'
    top-`window` association lists; the raw score is the fraction of pairs
    for which that holds. With fewer than two keywords every score is 0.
    """
    keyword_list = list(dict.fromkeys(keywords))
    candidate_list = list(candidates)
    pairs = list(combinations(keyword_list, 2))
    if not pairs:
        return {api: (0.0, 0.0) for api in candidate_list}

    tops = {
        k: {api for api, _ in index.top_apis(k, window)} for k in keyword_list
    }
    hits: dict[str, int] = {api: 0 for api in candidate_list}
    for first, second in pairs:
        coherent = tops[first] & tops[second]
        for api in candidate_list:
            if api in coherent:
                hits[api] += 1

    raw = {api: hits[api] / len(pairs) for api in candidate_list}
    top = max(raw.values())
    if top == 0:
        return {api: (0.0, 0.0) for api in candidate_list}
    return {api: (value, value / top) for api, value in raw.items()}


def combine_relevance(
    scored: Mapping[str, tuple[int, float, float, float]],
) -> list[ApiCandidate]:
    """Rank candidates by the max-normalized mean of normalized KAC and KKC.

    `scored` maps api -> (kac_raw, kac, kkc_raw, kkc). Ties break by KAC
    descending, then API name ascending.
    """
    if not scored:
        return []
    means = {api: (kac + kkc) / 2.0 for api, (_, kac, _, kkc) in scored.items()}
    top = max(means.values())
    candidates = [
        ApiCandidate(
            api=api,
            kac_raw=kac_raw,
            kac=kac,
            kkc_raw=kkc_raw,
            kkc=kkc,
            relevance=means[api] / top if top > 0 else 0.0,
        )
        for api, (kac_raw, kac, kkc_raw, kkc) in scored.items()
    ]
    candidates.sort(key=lambda c: (-c.relevance, -c.kac, c.api))
    return candidates


def suggest(
    index: KeywordApiIndex,
    raw_query: str,
    top: int = DEFAULT_TOP,
    stoplist: Iterable[str] | None = None,
    window: int = DEFAULT_COHERENCE_WINDOW,
) -> Suggestion:
    """Full reformulation pipeline: keywords -> KAC -> KKC -> ranked top APIs.

    Raises EmptyQueryError when preprocessing leaves no keywords; an empty
    candidate list is a legal result, not an error.
    """
    query = make_query(raw_query, stoplist)
    kac = kac_scores(index, query.keywords)
    if not kac:
        return Suggestion(query=query, candidates=())
    kkc = kkc_scores(index, query.keywords, kac.keys(), window)
    merged = {
        api: (kac_raw, kac_norm, kkc[api][0], kkc[api][1])
        for api, (kac_raw, kac_norm) in kac.items()
    }
    ranked = combine_relevance(merged)
    return Suggestion(query=query, candidates=tuple(ranked[:top]))


_LINE_COMMENT_RE = re.compile(r"^\s*//(.*)$")


def extract_comment_query(source_text: str, line: int) -> str:
    """Pull the comment block ending at, or immediately above, `line`.

    Handles `//` runs and `/* ... */` blocks; delimiters and leading
    asterisks are stripped and whitespace is normalized. Blank lines between
    the comment and `line` are tolerated. Raises NoWorkingContextError when
    nothing qualifies.
    """
    lines = source_text.splitlines()
    if line < 1 or line > len(lines):
        raise ValueError(f"line {line} outside file of {len(lines)} lines")

    blocks = _comment_blocks(lines)
    for start, end, text in reversed(blocks):
        if start <= line <= end:
            return text
        if end < line and all(not lines[i].strip() for i in range(end, line - 1)):
            return text
        if end < line:
            break
    raise NoWorkingContextError(f"no comment block ends at or above line {line}")


def _comment_blocks(lines: list[str]) -> list[tuple[int, int, str]]:
    """All comment blocks as (start_line, end_line, normalized_text), 1-based."""
    blocks: list[tuple[int, int, str]] = []
    i = 0
    n = len(lines)
    while i < n:
        stripped = lines[i].strip()
        m = _LINE_COMMENT_RE.match(lines[i])
        if m:
            start = i
            texts = [m.group(1)]
            while i + 1 < n:
                nxt = _LINE_COMMENT_RE.match(lines[i + 1])
                if not nxt:
                    break
                i += 1
                texts.append(nxt.group(1))
            blocks.append((start + 1, i + 1, " ".join(" ".join(texts).split())))
        elif "/*" in stripped:
            start = i
            col = lines[i].index("/*")
            texts = []
            closed = False
            while i < n:
                segment = lines[i][col:] if i == start else lines[i]
                if "*/" in segment:
                    segment = segment[: segment.index("*/")]
                    closed = True
                texts.append(segment)
                if closed:
                    break
                col = 0
                i += 1
            if not closed:
                break  # unterminated block: nothing usable at or after it
            cleaned = []
            for text in texts:
                text = text.replace("/*", " ", 1)
                cleaned.append(text.lstrip().lstrip("*"))
            blocks.append((start + 1, i + 1, " ".join(" ".join(cleaned).split())))
        i += 1
    return blocks
