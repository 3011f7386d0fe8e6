import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # makes `oracle` importable

from rack.corpus import LocalCorpusIndex
from rack.indexstore import KeywordApiIndex, save
from rack.ingest import IngestStats, build_associations, parse_dump

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def qa_pairs():
    return list(parse_dump(FIXTURES / "mini_posts.xml", "xml", stats=IngestStats()))


@pytest.fixture(scope="session")
def associations(qa_pairs):
    return build_associations(qa_pairs)


@pytest.fixture(scope="session")
def fixture_index(associations) -> KeywordApiIndex:
    return KeywordApiIndex.from_associations(associations, source_digest="fixture")


@pytest.fixture(scope="session")
def fixture_index_file(fixture_index, tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("idx") / "mini_posts.rackidx"
    save(fixture_index, path)
    return path


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return FIXTURES / "corpus"


@pytest.fixture(scope="session")
def corpus_index(corpus_dir) -> LocalCorpusIndex:
    return LocalCorpusIndex(corpus_dir)


@pytest.fixture(scope="session")
def corpus_inventory() -> dict:
    return json.loads((FIXTURES / "corpus_inventory.json").read_text())


def recorded_transport(fixture_name: str):
    """httpx.MockTransport replaying a recorded code-search session."""
    import httpx

    recording = json.loads((FIXTURES / "recorded" / fixture_name).read_text())

    def handler(request: httpx.Request) -> httpx.Response:
        if request.url.path == "/search/code":
            spec = recording["search"]
        else:
            spec = recording["contents"].get(str(request.url))
            if spec is None:
                return httpx.Response(404, json={"message": "Not Found"})
        return httpx.Response(
            spec["status"], headers=spec.get("headers", {}), json=spec.get("json")
        )

    return httpx.MockTransport(handler)
