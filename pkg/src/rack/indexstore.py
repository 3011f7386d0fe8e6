"""Persistent keyword-API mapping database.

On-disk format (`RACKIDX 1`, UTF-8, LF line endings):

    RACKIDX 1
    # records <n>
    # source <sha256 of the dump, or ->
    # built <ISO-8601 UTC, or ->
    <keyword>\t<api>\t<count>        (rows sorted by keyword, then api)
    <sha256 hex of every preceding byte>

Human-inspectable, diffable, and cheap to verify.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Mapping

FORMAT_NAME = "RACKIDX"
FORMAT_VERSION = 1


class IndexFormatError(RuntimeError):
    """Version mismatch, checksum failure, or truncated index file."""


@dataclass
class IndexMeta:
    records: int = 0
    source_digest: str | None = None
    built_at: str | None = None


class KeywordApiIndex:
    """Immutable-after-build map keyword -> api -> co-occurrence count."""

    def __init__(
        self,
        entries: Mapping[str, Mapping[str, int]] | None = None,
        meta: IndexMeta | None = None,
    ) -> None:
        self.entries: dict[str, dict[str, int]] = {
            k: dict(v) for k, v in (entries or {}).items() if v
        }
        records = sum(len(v) for v in self.entries.values())
        self.meta = meta or IndexMeta()
        self.meta.records = records

    @classmethod
    def from_associations(
        cls,
        associations: Mapping[tuple[str, str], int] | Iterable[tuple[str, str, int]],
        source_digest: str | None = None,
        built_at: str | None = None,
    ) -> "KeywordApiIndex":
        entries: dict[str, dict[str, int]] = {}
        items: Iterable[tuple[str, str, int]]
        if isinstance(associations, Mapping):
            items = ((k, a, c) for (k, a), c in associations.items())
        else:
            items = associations
        for keyword, api, count in items:
            if count < 1:
                raise ValueError(f"association count must be >= 1: {(keyword, api, count)}")
            entries.setdefault(keyword, {})[api] = count
        return cls(entries, IndexMeta(source_digest=source_digest, built_at=built_at))

    @property
    def vocabulary(self) -> set[str]:
        return set(self.entries)

    @property
    def api_universe(self) -> set[str]:
        apis: set[str] = set()
        for counts in self.entries.values():
            apis.update(counts)
        return apis

    def lookup(self, keyword: str) -> dict[str, int]:
        """Per-API co-occurrence counts for a keyword; {} when unknown."""
        return dict(self.entries.get(keyword, {}))

    def top_apis(self, keyword: str, m: int) -> list[tuple[str, int]]:
        """The m strongest APIs for a keyword: count descending, name ascending."""
        if m < 1:
            raise ValueError("m must be >= 1")
        counts = self.entries.get(keyword, {})
        ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
        return ranked[:m]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KeywordApiIndex):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:  # pragma: no cover
        return f"KeywordApiIndex(keywords={len(self.entries)}, records={self.meta.records})"


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _render(index: KeywordApiIndex) -> bytes:
    lines = [f"{FORMAT_NAME} {FORMAT_VERSION}"]
    lines.append(f"# records {index.meta.records}")
    lines.append(f"# source {index.meta.source_digest or '-'}")
    lines.append(f"# built {index.meta.built_at or '-'}")
    for keyword in sorted(index.entries):
        for api in sorted(index.entries[keyword]):
            lines.append(f"{keyword}\t{api}\t{index.entries[keyword][api]}")
    body = ("\n".join(lines) + "\n").encode("utf-8")
    checksum = hashlib.sha256(body).hexdigest()
    return body + checksum.encode("ascii") + b"\n"


def save(index: KeywordApiIndex, path: str | Path) -> None:
    Path(path).write_bytes(_render(index))


def load(path: str | Path) -> KeywordApiIndex:
    """Read an index file, verifying version and checksum."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise IndexFormatError(f"cannot read index: {exc}") from exc

    if not raw.endswith(b"\n"):
        raise IndexFormatError("truncated index file: missing final newline")
    body_end = raw.rfind(b"\n", 0, len(raw) - 1)
    if body_end < 0:
        raise IndexFormatError("truncated index file: no checksum line")
    body, checksum_line = raw[: body_end + 1], raw[body_end + 1 : -1]
    expected = hashlib.sha256(body).hexdigest().encode("ascii")
    if checksum_line != expected:
        raise IndexFormatError("checksum mismatch: file is corrupt or truncated")

    lines = body.decode("utf-8").splitlines()
    header = lines[0].split()
    if len(header) != 2 or header[0] != FORMAT_NAME:
        raise IndexFormatError(f"not an index file: header {lines[0]!r}")
    if header[1] != str(FORMAT_VERSION):
        raise IndexFormatError(f"unsupported index version {header[1]}")

    meta = IndexMeta()
    entries: dict[str, dict[str, int]] = {}
    declared_records = None
    for line in lines[1:]:
        if line.startswith("# "):
            _, key, value = line.split(" ", 2)
            if key == "records":
                declared_records = int(value)
            elif key == "source":
                meta.source_digest = None if value == "-" else value
            elif key == "built":
                meta.built_at = None if value == "-" else value
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise IndexFormatError(f"malformed row: {line!r}")
        keyword, api, count_text = parts
        count = int(count_text)
        if count < 1:
            raise IndexFormatError(f"non-positive count in row: {line!r}")
        entries.setdefault(keyword, {})[api] = count

    index = KeywordApiIndex(entries, meta)
    if declared_records is not None and declared_records != index.meta.records:
        raise IndexFormatError(
            f"record count mismatch: header says {declared_records}, found {index.meta.records}"
        )
    return index
