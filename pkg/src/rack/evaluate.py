"""hit@N / MRR evaluation of API suggestions against a gold set.

Gold file format: JSONL, one object per line with `query` (free text) and
`gold_apis` (list of API class names counted as relevant).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from rack.indexstore import KeywordApiIndex
from rack.reformulate import EmptyQueryError, suggest


@dataclass(frozen=True)
class GoldEntry:
    query: str
    gold_apis: tuple[str, ...]


@dataclass
class EvalReport:
    top: int
    queries: int
    hits: int
    reciprocal_rank_sum: float

    @property
    def hit_rate(self) -> float:
        return self.hits / self.queries if self.queries else 0.0

    @property
    def mrr(self) -> float:
        return self.reciprocal_rank_sum / self.queries if self.queries else 0.0


def load_gold(path: str | Path) -> list[GoldEntry]:
    entries = []
    for lineno, line in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
        if not line.strip():
            continue
        record = json.loads(line)
        try:
            entries.append(
                GoldEntry(query=str(record["query"]), gold_apis=tuple(record["gold_apis"]))
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"{path}:{lineno}: bad gold entry") from exc
    return entries


def evaluate(index: KeywordApiIndex, entries: list[GoldEntry], top: int = 10) -> EvalReport:
    """Fraction of queries with >=1 gold API in the top-N suggestions, plus MRR.

    Queries that preprocess to nothing, or whose gold APIs never surface,
    count as misses.
    """
    if not entries:
        raise ValueError("gold set is empty")
    hits = 0
    rr_sum = 0.0
    for entry in entries:
        try:
            suggestion = suggest(index, entry.query, top=top)
        except EmptyQueryError:
            continue
        gold = set(entry.gold_apis)
        for rank, candidate in enumerate(suggestion.candidates, start=1):
            if candidate.api in gold:
                hits += 1
                rr_sum += 1.0 / rank
                break
    return EvalReport(top=top, queries=len(entries), hits=hits, reciprocal_rank_sum=rr_sum)
