"""Natural-language preprocessing: stop lists and keyword extraction."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

from rack.kernels import porter_stem, split_subtokens

MIN_TOKEN_LEN = 2


def _load_wordlist(name: str) -> frozenset[str]:
    text = resources.files("rack.data").joinpath(name).read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


@lru_cache(maxsize=None)
def english_stopwords() -> frozenset[str]:
    return _load_wordlist("stopwords_english.txt")


@lru_cache(maxsize=None)
def domain_stopwords() -> frozenset[str]:
    return _load_wordlist("stopwords_domain.txt")


@lru_cache(maxsize=None)
def default_stoplist() -> frozenset[str]:
    """English stop words plus corpus-specific noise terms."""
    return english_stopwords() | domain_stopwords()


@lru_cache(maxsize=None)
def java_blocklist() -> frozenset[str]:
    """Java keywords, primitives, and literals; never API names or tokens."""
    return _load_wordlist("java_blocklist.txt")


def load_stoplist(path: str | Path) -> frozenset[str]:
    """Read a user-supplied stop list, one lower-cased token per line."""
    words = set()
    for line in Path(path).read_text("utf-8").splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def extract_keywords(text: str, stoplist: Iterable[str] | None = None) -> list[str]:
    """Turn free text into an ordered, de-duplicated list of stemmed keywords.

    Pipeline: split on punctuation and camel-case humps, lower-case, drop
    stop words, Porter-stem, de-duplicate preserving first occurrence, and
    drop tokens shorter than two characters.
    """
    stop = default_stoplist() if stoplist is None else stoplist
    keywords: list[str] = []
    seen: set[str] = set()
    for token in split_subtokens(text):
        if token in stop:
            continue
        stem = porter_stem(token)
        if len(stem) < MIN_TOKEN_LEN or stem in seen:
            continue
        seen.add(stem)
        keywords.append(stem)
    return keywords
