"""Command-line interface: ingest, suggest, search, suggest-from, eval, serve.

Exit codes: 0 success, 2 user-input error, 3 environment/backend error.
"""

from __future__ import annotations

import hashlib
import sys
from pathlib import Path

import click

from rack import corpus as corpus_mod
from rack import evaluate as evaluate_mod
from rack import indexstore, snippets, wire
from rack.corpus import CorpusError
from rack.ingest import DumpError, IngestStats, build_associations, parse_dump
from rack.reformulate import (
    DEFAULT_TOP,
    EmptyQueryError,
    NoWorkingContextError,
    Suggestion,
    extract_comment_query,
    make_query,
    suggest,
)

EXIT_USER = 2
EXIT_ENV = 3


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_index(path: str) -> indexstore.KeywordApiIndex:
    try:
        return indexstore.load(path)
    except indexstore.IndexFormatError as exc:
        _fail(str(exc), EXIT_ENV)
        raise AssertionError("unreachable")


@click.group()
@click.version_option(package_name="rack-codesearch")
def main() -> None:
    """Translate natural-language programming queries into API classes and
    search a code corpus for method-level snippets."""


@main.command()
@click.option("--posts", required=True, type=click.Path(exists=True), help="Q&A dump file.")
@click.option("--format", "fmt", type=click.Choice(["xml", "jsonl"]), default="xml",
              show_default=True, help="Dump format.")
@click.option("--tag", default=None, help="Keep only questions carrying this tag.")
@click.option("--out", required=True, type=click.Path(), help="Index file to write.")
@click.option("--no-meta", is_flag=True, help="Omit source digest and timestamp "
              "(byte-deterministic output).")
def ingest(posts: str, fmt: str, tag: str | None, out: str, no_meta: bool) -> None:
    """Mine keyword-API associations from a Q&A dump into an index file."""
    stats = IngestStats()
    try:
        associations = build_associations(parse_dump(posts, fmt, stats=stats, tag=tag))
    except DumpError as exc:
        _fail(str(exc), EXIT_ENV)
        return
    if no_meta:
        source_digest = built_at = None
    else:
        source_digest = hashlib.sha256(Path(posts).read_bytes()).hexdigest()
        built_at = indexstore.utc_timestamp()
    index = indexstore.KeywordApiIndex.from_associations(
        associations, source_digest=source_digest, built_at=built_at
    )
    indexstore.save(index, out)
    click.echo(
        f"questions={stats.questions} pairs={stats.pairs} "
        f"records={index.meta.records} warnings={stats.warnings}"
    )


def _print_suggestion(suggestion: Suggestion) -> None:
    click.echo("keywords: " + " ".join(suggestion.query.keywords))
    if not suggestion.candidates:
        click.echo("no candidate APIs found")
        return
    width = max(len(c.api) for c in suggestion.candidates)
    click.echo(f"{'API':<{width}}  {'KAC':>5}  {'KKC':>5}  {'Relevance':>9}")
    for c in suggestion.candidates:
        click.echo(f"{c.api:<{width}}  {c.kac:>5.2f}  {c.kkc:>5.2f}  {c.relevance:>9.2f}")


@main.command(name="suggest")
@click.argument("query")
@click.option("--index", "index_path", required=True, type=click.Path(exists=True))
@click.option("--top", default=DEFAULT_TOP, show_default=True, type=click.IntRange(min=1))
@click.option("--json", "as_json", is_flag=True, help="Emit the /v1/reformulate payload.")
def suggest_cmd(query: str, index_path: str, top: int, as_json: bool) -> None:
    """Suggest the top API classes for a natural-language QUERY."""
    index = _load_index(index_path)
    try:
        suggestion = suggest(index, query, top=top)
    except EmptyQueryError:
        _fail("EMPTY_QUERY: query is empty after stop-word removal", EXIT_USER)
        return
    if as_json:
        click.echo(wire.to_json_bytes(wire.reformulate_payload(suggestion)).decode("utf-8"))
    else:
        _print_suggestion(suggestion)


def _print_results(results: list[snippets.SnippetResult], show_code: bool) -> None:
    if not results:
        click.echo(snippets.NO_SNIPPETS_NOTICE)
        return
    for rank, result in enumerate(results, start=1):
        s = result.snippet
        hit = s.file
        where = f"{hit.repo}:{hit.path}" if hit else "?"
        click.echo(
            f"#{rank} combined={result.combined:.2f} sim={result.similarity:.2f} "
            f"{where}:{s.start_line}-{s.end_line} {s.name}"
        )
        click.echo(f"   matched: {' '.join(sorted(result.matched_keywords)) or '-'}")
        if show_code or rank == 1:
            for line in s.body.splitlines():
                click.echo(f"   | {line}")


@main.command(name="search")
@click.argument("query")
@click.option("--apis", required=True, help="Comma-separated API class names.")
@click.option("--index", "index_path", required=True, type=click.Path(exists=True))
@click.option("--corpus", "corpus_dir", type=click.Path(exists=True, file_okay=False),
              help="Local corpus directory (offline backend).")
@click.option("--remote", is_flag=True, help="Use the remote code-search host.")
@click.option("--k", default=DEFAULT_TOP, show_default=True, type=click.IntRange(min=1))
@click.option("--top1", is_flag=True, help="Return only the single best snippet.")
@click.option("--host-weight", default=0.5, show_default=True,
              help="Weight of the host score in the combined relevance.")
@click.option("--code", "show_code", is_flag=True, help="Print every snippet body.")
@click.option("--json", "as_json", is_flag=True, help="Emit the /v1/search payload.")
def search_cmd(query: str, apis: str, index_path: str, corpus_dir: str | None,
               remote: bool, k: int, top1: bool, host_weight: float,
               show_code: bool, as_json: bool) -> None:
    """Search the code corpus with chosen API classes and rank method snippets."""
    api_terms = [a.strip() for a in apis.split(",") if a.strip()]
    if not api_terms:
        _fail("NO_APIS: --apis must name at least one API class", EXIT_USER)
    if bool(corpus_dir) == remote:
        _fail("choose exactly one backend: --corpus <dir> or --remote", EXIT_USER)
    _load_index(index_path)  # fail fast on a broken index; keywords need no index
    try:
        query_obj = make_query(query)
    except EmptyQueryError:
        _fail("EMPTY_QUERY: query is empty after stop-word removal", EXIT_USER)
        return
    if top1:
        k = 1
    try:
        if remote:
            hits = corpus_mod.GitHubCodeSearch().search(api_terms, limit=max(k, 10))
        else:
            assert corpus_dir is not None
            hits = corpus_mod.local_search(
                corpus_mod.LocalCorpusIndex(corpus_dir), api_terms, limit=max(k, 10)
            )
    except CorpusError as exc:
        _fail(f"{exc.code}: {exc}", EXIT_ENV)
        return
    results = snippets.rank_snippets(hits, query_obj, api_terms, k=k, host_weight=host_weight)
    if as_json:
        notice = snippets.NO_SNIPPETS_NOTICE if not results else None
        click.echo(wire.to_json_bytes(wire.search_payload(results, notice)).decode("utf-8"))
    else:
        _print_results(results, show_code)


@main.command(name="suggest-from")
@click.option("--file", "source_file", required=True, type=click.Path(exists=True),
              help="Source file to read the working context from.")
@click.option("--line", required=True, type=int, help="1-based line of interest.")
@click.option("--index", "index_path", required=True, type=click.Path(exists=True))
@click.option("--top", default=DEFAULT_TOP, show_default=True, type=click.IntRange(min=1))
@click.option("--json", "as_json", is_flag=True)
def suggest_from(source_file: str, line: int, index_path: str, top: int, as_json: bool) -> None:
    """Use the comment above LINE as the query and suggest APIs for it."""
    text = Path(source_file).read_text("utf-8", errors="replace")
    try:
        comment = extract_comment_query(text, line)
    except (NoWorkingContextError, ValueError) as exc:
        _fail(str(exc), EXIT_USER)
        return
    index = _load_index(index_path)
    try:
        suggestion = suggest(index, comment, top=top)
    except EmptyQueryError:
        _fail("EMPTY_QUERY: comment is empty after stop-word removal", EXIT_USER)
        return
    if as_json:
        click.echo(wire.to_json_bytes(wire.reformulate_payload(suggestion)).decode("utf-8"))
    else:
        click.echo(f"query: {comment}")
        _print_suggestion(suggestion)


@main.command(name="eval")
@click.option("--gold", required=True, type=click.Path(exists=True),
              help="JSONL gold set: {query, gold_apis}.")
@click.option("--index", "index_path", required=True, type=click.Path(exists=True))
@click.option("--top", default=DEFAULT_TOP, show_default=True, type=click.IntRange(min=1))
def eval_cmd(gold: str, index_path: str, top: int) -> None:
    """Report hit@N and mean reciprocal rank over a gold set."""
    try:
        entries = evaluate_mod.load_gold(gold)
    except ValueError as exc:
        _fail(str(exc), EXIT_USER)
        return
    if not entries:
        _fail("gold set is empty", EXIT_USER)
    index = _load_index(index_path)
    report = evaluate_mod.evaluate(index, entries, top=top)
    click.echo(f"queries={report.queries}")
    click.echo(f"hit@{report.top}={report.hit_rate:.2f}")
    click.echo(f"mrr={report.mrr:.2f}")


@main.command(name="serve")
@click.option("--index", "index_path", type=click.Path(exists=True))
@click.option("--corpus", "corpus_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--remote", is_flag=True)
@click.option("--host", default=None)
@click.option("--port", default=None, type=int)
@click.option("--config", "config_path", type=click.Path(exists=True),
              help="key = value config file; flags override it.")
@click.option("--static", "static_dir", type=click.Path(exists=True, file_okay=False),
              help="Directory of web UI assets to serve at /.")
def serve_cmd(index_path, corpus_dir, remote, host, port, config_path, static_dir) -> None:
    """Run the HTTP service."""
    import uvicorn

    from rack.service import ServiceConfig, create_app, load_config

    config = load_config(config_path) if config_path else ServiceConfig()
    if index_path:
        config.index_path = index_path
    if corpus_dir:
        config.corpus_dir = corpus_dir
    if remote:
        config.backend = "remote"
    if host:
        config.host = host
    if port:
        config.port = port
    if static_dir:
        config.static_dir = static_dir
    if config.index_path is None:
        _fail("an index is required: pass --index or set index_path in the config", EXIT_USER)
    try:
        app = create_app(config)
    except indexstore.IndexFormatError as exc:
        _fail(str(exc), EXIT_ENV)
        return
    uvicorn.run(app, host=config.host, port=config.port)


if __name__ == "__main__":
    main()
