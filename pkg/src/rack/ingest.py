"""Q&A dump parsing and keyword-API association mining.

A dump is either a Stack Exchange style Posts XML file (rows with PostTypeId,
AcceptedAnswerId, Title, Tags, Body) or JSONL with one question per line.
Only questions whose accepted answer is present in the dump are mined.
"""

from __future__ import annotations

import html
import json
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, NamedTuple
from xml.etree import ElementTree

from rack.kernels import find_identifiers
from rack.textprep import extract_keywords, java_blocklist

# code islands: <code>/<pre> regions in rendered bodies, fenced blocks in
# markdown-ish ones; prose between islands is never scanned
_MARKUP_ISLAND_RE = re.compile(r"<(code|pre)[^>]*>(.*?)</\1\s*>", re.S | re.I)
_FENCE_ISLAND_RE = re.compile(r"```[^\n]*\n(.*?)```", re.S)
_TAG_SPLIT_RE = re.compile(r"[^<>|]+")


class DumpError(RuntimeError):
    """Unreadable or structurally broken dump source."""


@dataclass(frozen=True)
class QAPair:
    """One question joined to its accepted answer."""

    question_id: int
    title: str
    tags: frozenset[str]
    answer_body: str


class AssociationRecord(NamedTuple):
    keyword: str
    api: str
    count: int


@dataclass
class IngestStats:
    questions: int = 0
    pairs: int = 0
    warnings: int = 0
    messages: list[str] = field(default_factory=list)

    def warn(self, message: str) -> None:
        self.warnings += 1
        self.messages.append(message)


def parse_dump(
    source: str | Path | IO[bytes],
    format: str = "xml",
    stats: IngestStats | None = None,
    tag: str | None = None,
) -> Iterator[QAPair]:
    """Yield one QAPair per question with an accepted answer in the dump.

    Malformed records are skipped and tallied on `stats`; an unreadable or
    non-well-formed source raises DumpError. `tag` keeps only questions
    carrying that tag.
    """
    if format == "xml":
        return _parse_xml(source, stats, tag)
    if format == "jsonl":
        return _parse_jsonl(source, stats, tag)
    raise ValueError(f"unknown dump format: {format!r}")


def _parse_tags(raw: str) -> frozenset[str]:
    return frozenset(t.strip().lower() for t in _TAG_SPLIT_RE.findall(raw) if t.strip())


def _parse_xml(source, stats, tag) -> Iterator[QAPair]:
    stats = stats if stats is not None else IngestStats()
    questions: list[tuple[int, str, frozenset[str], int]] = []
    answers: dict[int, str] = {}
    try:
        for _, elem in ElementTree.iterparse(source, events=("end",)):
            if elem.tag != "row":
                continue
            attrs = elem.attrib
            try:
                post_type = attrs["PostTypeId"]
                post_id = int(attrs["Id"])
            except (KeyError, ValueError):
                stats.warn(f"row missing Id/PostTypeId: {dict(attrs)!r}")
                elem.clear()
                continue
            if post_type == "1":
                stats.questions += 1
                title = attrs.get("Title", "").strip()
                accepted = attrs.get("AcceptedAnswerId")
                if not title:
                    stats.warn(f"question {post_id} has no title")
                elif accepted is not None:
                    try:
                        accepted_id = int(accepted)
                    except ValueError:
                        stats.warn(f"question {post_id} has bad AcceptedAnswerId")
                    else:
                        tags = _parse_tags(attrs.get("Tags", ""))
                        questions.append((post_id, title, tags, accepted_id))
            elif post_type == "2":
                answers[post_id] = attrs.get("Body", "")
            elem.clear()
    except (OSError, ElementTree.ParseError) as exc:
        raise DumpError(f"cannot read XML dump: {exc}") from exc

    for post_id, title, tags, accepted_id in questions:
        if accepted_id not in answers:
            continue
        if tag is not None and tag.lower() not in tags:
            continue
        stats.pairs += 1
        yield QAPair(post_id, title, tags, answers[accepted_id])


def _parse_jsonl(source, stats, tag) -> Iterator[QAPair]:
    stats = stats if stats is not None else IngestStats()
    try:
        if isinstance(source, (str, Path)):
            text = Path(source).read_text("utf-8")
        else:
            data = source.read()
            text = data.decode("utf-8") if isinstance(data, bytes) else data
    except OSError as exc:
        raise DumpError(f"cannot read JSONL dump: {exc}") from exc

    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            question_id = int(record["id"])
            title = str(record["title"]).strip()
        except (json.JSONDecodeError, KeyError, TypeError, ValueError):
            stats.warn(f"bad JSONL record at line {lineno}")
            continue
        stats.questions += 1
        if not title:
            stats.warn(f"question {question_id} has no title")
            continue
        body = record.get("accepted_answer_body")
        if not body:
            continue
        tags = frozenset(str(t).lower() for t in record.get("tags", []))
        if tag is not None and tag.lower() not in tags:
            continue
        stats.pairs += 1
        yield QAPair(question_id, title, tags, str(body))


def extract_api_classes(answer_body: str, blocklist: frozenset[str] | None = None) -> set[str]:
    """Island-parse an answer body into its set of API class names.

    Only code islands are scanned. An API class is a maximal identifier whose
    first character is upper-case and which contains at least one lower-case
    character; blocklisted words are dropped. Unbalanced markup is harmless:
    islands that never close simply do not match.
    """
    block = java_blocklist() if blocklist is None else blocklist
    apis: set[str] = set()
    for regex, group in ((_MARKUP_ISLAND_RE, 2), (_FENCE_ISLAND_RE, 1)):
        for m in regex.finditer(answer_body):
            island = html.unescape(m.group(group))
            for ident in find_identifiers(island):
                if ident[0].isupper() and any(c.islower() for c in ident) and ident not in block:
                    apis.add(ident)
    return apis


def pair_associations(
    pair: QAPair, stoplist: Iterable[str] | None = None
) -> Counter[tuple[str, str]]:
    """Cross product of one pair's title keywords and answer APIs.

    Set semantics: each (keyword, api) counts once per pair no matter how
    often either side repeats within it.
    """
    keywords = extract_keywords(pair.title, stoplist)
    apis = extract_api_classes(pair.answer_body)
    return Counter((k, a) for k in keywords for a in apis)


def build_associations(
    pairs: Iterable[QAPair], stoplist: Iterable[str] | None = None
) -> Counter[tuple[str, str]]:
    """Merge per-pair associations; plain counter addition, so the merge is
    associative and order-independent."""
    total: Counter[tuple[str, str]] = Counter()
    for pair in pairs:
        total.update(pair_associations(pair, stoplist))
    return total


def association_records(associations: Counter[tuple[str, str]]) -> list[AssociationRecord]:
    return [
        AssociationRecord(keyword, api, count)
        for (keyword, api), count in sorted(associations.items())
    ]
