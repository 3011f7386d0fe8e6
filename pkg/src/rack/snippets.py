"""Method-level snippet extraction, tokenization, and combined ranking.

The extractor is a syntactic brace matcher, not a grammar: comments and
string/char literals are blanked first, then braces are classified by the
text segment that precedes them (type declaration, method signature at
type-body depth, or plain block). That keeps it robust on arbitrary,
possibly partial real-world files.
"""

from __future__ import annotations

import math
import re
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from rack.corpus import FileHit
from rack.kernels import find_identifiers, neutralize_java, porter_stem, split_subtokens
from rack.reformulate import Query
from rack.textprep import MIN_TOKEN_LEN, java_blocklist

NO_SNIPPETS_NOTICE = "no snippets: no method bodies found in any result file"


@dataclass(frozen=True)
class MethodSnippet:
    name: str
    start_line: int
    end_line: int
    body: str
    tokens: Counter
    file: FileHit | None = None


@dataclass(frozen=True)
class MethodScan:
    methods: tuple[MethodSnippet, ...]
    partial: bool


@dataclass(frozen=True)
class SnippetResult:
    snippet: MethodSnippet
    similarity: float
    combined: float
    matched_keywords: frozenset[str]


_TYPE_DECL_RE = re.compile(
    r"\b(?:class|interface|enum)\s+[A-Za-z_$]"
    r"|\brecord\s+[A-Za-z_$][\w$]*\s*\("
    r"|@\s*interface\s+[A-Za-z_$]"
)
_ANNOTATION_PREFIX_RE = re.compile(
    r"^(?:\s*@[\w$.]+(?:\s*\([^()]*(?:\([^()]*\)[^()]*)*\))?)*\s*"
)
_METHOD_SIG_RE = re.compile(
    r"""
    ^
    (?:(?:public|protected|private|abstract|static|final|native|synchronized|strictfp|default)\s+)*
    (?:<[^<>]*(?:<[^<>]*>[^<>]*)*>\s*)?          # type parameters
    (?P<ret>[\w$.<>\[\],\s?&]*?)                 # return type; empty for constructors
    \b(?P<name>[A-Za-z_$][\w$]*)\s*
    \((?P<params>[^()]*(?:\([^()]*\)[^()]*)*)\)
    \s*(?:throws\s+[\w$.\s,]+)?
    \s*\Z
    """,
    re.X,
)
_CONTROL_NAMES = frozenset(
    {"if", "for", "while", "switch", "catch", "do", "else", "try", "finally",
     "return", "new", "synchronized", "assert", "throw", "super", "this"}
)


def _match_signature(segment: str) -> tuple[int, str] | None:
    """Return (offset of signature start within segment, method name)."""
    ann = _ANNOTATION_PREFIX_RE.match(segment)
    offset = ann.end() if ann else 0
    rest = segment[offset:]
    if "=" in rest or "->" in rest:
        return None
    m = _METHOD_SIG_RE.match(rest)
    if not m or m.group("name") in _CONTROL_NAMES:
        return None
    return offset, m.group("name")


def scan_methods(content: str) -> MethodScan:
    """Extract every brace-balanced method body found at type-body depth.

    Signature-only declarations (abstract/interface methods) never open a
    brace and are skipped. On imbalance the methods completed before the
    break are returned and the scan is flagged partial.
    """
    neutral = neutralize_java(content)
    newline_offsets = [i for i, c in enumerate(neutral) if c == "\n"]

    def line_of(pos: int) -> int:
        return bisect_left(newline_offsets, pos) + 1

    methods: list[MethodSnippet] = []
    stack: list[tuple[str, int, str]] = []  # (kind, sig_char_offset, name)
    partial = False
    seg_start = 0
    for i, c in enumerate(neutral):
        if c == "{":
            segment = neutral[seg_start:i]
            if _TYPE_DECL_RE.search(segment):
                stack.append(("type", 0, ""))
            else:
                sig = None
                if not stack or stack[-1][0] == "type":
                    sig = _match_signature(segment)
                if sig is not None:
                    offset, name = sig
                    sig_char = seg_start + offset
                    sig_char += len(segment[offset:]) - len(segment[offset:].lstrip())
                    stack.append(("method", sig_char, name))
                else:
                    stack.append(("block", 0, ""))
            seg_start = i + 1
        elif c == "}":
            if not stack:
                partial = True
                break
            kind, sig_char, name = stack.pop()
            if kind == "method":
                body = content[sig_char : i + 1]
                methods.append(
                    MethodSnippet(
                        name=name,
                        start_line=line_of(sig_char),
                        end_line=line_of(i),
                        body=body,
                        tokens=tokenize_code(body),
                    )
                )
            seg_start = i + 1
        elif c == ";":
            seg_start = i + 1
    if stack:
        partial = True
    methods.sort(key=lambda m: m.start_line)
    return MethodScan(methods=tuple(methods), partial=partial)


def extract_methods(content: str) -> list[MethodSnippet]:
    return list(scan_methods(content).methods)


def tokenize_code(body: str) -> Counter:
    """Bag of stemmed sub-tokens from a code fragment.

    Comments and literals are blanked, identifiers equal to Java keywords
    are dropped, the rest split on camel humps and underscores, lower-cased,
    Porter-stemmed, and length-filtered. Multiset semantics.
    """
    block = java_blocklist()
    bag: Counter = Counter()
    for ident in find_identifiers(neutralize_java(body)):
        if ident in block:
            continue
        for sub in split_subtokens(ident):
            stem = porter_stem(sub)
            if len(stem) >= MIN_TOKEN_LEN:
                bag[stem] += 1
    return bag


def similarity(query_tokens: Mapping[str, int], snippet_tokens: Mapping[str, int]) -> float:
    """Cosine similarity of term-frequency vectors; 0 when either is empty."""
    if not query_tokens or not snippet_tokens:
        return 0.0
    dot = sum(count * snippet_tokens.get(token, 0) for token, count in query_tokens.items())
    if dot == 0:
        return 0.0
    query_norm = math.sqrt(sum(c * c for c in query_tokens.values()))
    snippet_norm = math.sqrt(sum(c * c for c in snippet_tokens.values()))
    return dot / (query_norm * snippet_norm)


def query_token_set(query: Query, selected_apis: Sequence[str]) -> Counter:
    """Query keywords united with the stemmed sub-tokens of the chosen APIs."""
    tokens = set(query.keywords)
    for api in selected_apis:
        for sub in split_subtokens(api):
            stem = porter_stem(sub)
            if len(stem) >= MIN_TOKEN_LEN:
                tokens.add(stem)
    return Counter(dict.fromkeys(tokens, 1))


def _verbatim_in(api: str, body: str) -> bool:
    return re.search(rf"(?<![\w$]){re.escape(api)}(?![\w$])", body) is not None


def rank_snippets(
    hits: Iterable[FileHit],
    query: Query,
    selected_apis: Sequence[str],
    k: int = 10,
    host_weight: float = 0.5,
) -> list[SnippetResult]:
    """Score every method of every hit and return the top k.

    combined = host_weight * (host_score / max host_score)
             + (1 - host_weight) * cosine(query tokens, method tokens)

    Ties break by host rank, then start line. Top-1 search is k=1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    hits = list(hits)
    query_tokens = query_token_set(query, selected_apis)
    max_host = max((h.host_score for h in hits), default=0.0)

    results: list[SnippetResult] = []
    for hit in hits:
        norm_host = hit.host_score / max_host if max_host > 0 else 0.0
        for method in scan_methods(hit.content).methods:
            sim = similarity(query_tokens, method.tokens)
            matched = set(query_tokens) & set(method.tokens)
            matched.update(a for a in selected_apis if _verbatim_in(a, method.body))
            results.append(
                SnippetResult(
                    snippet=replace(method, file=hit),
                    similarity=sim,
                    combined=host_weight * norm_host + (1.0 - host_weight) * sim,
                    matched_keywords=frozenset(matched),
                )
            )
    results.sort(
        key=lambda r: (
            -r.combined,
            r.snippet.file.host_rank if r.snippet.file else 0,
            r.snippet.start_line,
        )
    )
    return results[:k]
