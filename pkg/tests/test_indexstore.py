"""Index persistence: format, round-trips, lookups, top-API ranking."""

import hashlib

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rack.indexstore import (
    IndexFormatError,
    IndexMeta,
    KeywordApiIndex,
    load,
    save,
)

KEYWORDS = st.from_regex(r"[a-z][a-z0-9]{0,9}", fullmatch=True)
APIS = st.from_regex(r"[A-Z][a-zA-Z0-9]{0,11}[a-z]", fullmatch=True)

INDEXES = st.dictionaries(
    KEYWORDS,
    st.dictionaries(APIS, st.integers(min_value=1, max_value=10_000), min_size=1, max_size=6),
    max_size=12,
)


def make_index(entries, **meta):
    return KeywordApiIndex(entries, IndexMeta(**meta))


class TestRoundTrip:
    def test_fixture_round_trip(self, fixture_index, tmp_path):
        path = tmp_path / "x.rackidx"
        save(fixture_index, path)
        loaded = load(path)
        assert loaded.entries == fixture_index.entries
        assert loaded.meta.records == fixture_index.meta.records
        assert loaded.meta.source_digest == "fixture"

    def test_empty_index_round_trip(self, tmp_path):
        path = tmp_path / "empty.rackidx"
        save(make_index({}), path)
        loaded = load(path)
        assert loaded.entries == {}
        assert loaded.meta.records == 0
        assert loaded.vocabulary == set()
        assert loaded.lookup("anything") == {}

    @given(entries=INDEXES)
    @settings(max_examples=100, deadline=None)
    def test_randomized_round_trip(self, tmp_path_factory, entries):
        index = make_index(entries, source_digest="d" * 64, built_at="2024-01-01T00:00:00Z")
        path = tmp_path_factory.mktemp("rt") / "r.rackidx"
        save(index, path)
        loaded = load(path)
        assert loaded.entries == index.entries
        assert loaded.meta.records == index.meta.records
        assert loaded.meta.source_digest == index.meta.source_digest
        assert loaded.meta.built_at == index.meta.built_at

    def test_save_is_deterministic(self, fixture_index, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        save(fixture_index, a)
        save(fixture_index, b)
        assert a.read_bytes() == b.read_bytes()


class TestFormat:
    def test_layout(self, tmp_path):
        path = tmp_path / "fmt.rackidx"
        save(make_index({"hash": {"MessageDigest": 3, "File": 1}}), path)
        raw = path.read_bytes()
        assert b"\r" not in raw
        lines = raw.decode("utf-8").splitlines()
        assert lines[0] == "RACKIDX 1"
        rows = [l for l in lines if not l.startswith(("RACKIDX", "#"))][:-1]
        assert rows == ["hash\tFile\t1", "hash\tMessageDigest\t3"]
        checksum = lines[-1]
        assert checksum == hashlib.sha256(
            raw[: raw.rfind(checksum.encode()) ]
        ).hexdigest()
        assert checksum == checksum.lower()

    def test_truncated_file_rejected(self, fixture_index, tmp_path):
        path = tmp_path / "t.rackidx"
        save(fixture_index, path)
        raw = path.read_bytes()
        (tmp_path / "cut.rackidx").write_bytes(raw[: len(raw) // 2])
        with pytest.raises(IndexFormatError):
            load(tmp_path / "cut.rackidx")

    def test_corrupted_row_rejected(self, fixture_index, tmp_path):
        path = tmp_path / "c.rackidx"
        save(fixture_index, path)
        raw = path.read_bytes().replace(b"hash\t", b"hasX\t", 1)
        path.write_bytes(raw)
        with pytest.raises(IndexFormatError, match="checksum"):
            load(path)

    def test_version_mismatch_rejected(self, tmp_path):
        body = b"RACKIDX 9\n# records 0\n# source -\n# built -\n"
        checksum = hashlib.sha256(body).hexdigest().encode()
        path = tmp_path / "v.rackidx"
        path.write_bytes(body + checksum + b"\n")
        with pytest.raises(IndexFormatError, match="version"):
            load(path)

    def test_not_an_index_rejected(self, tmp_path):
        path = tmp_path / "no.rackidx"
        path.write_bytes(b"just some text\n")
        with pytest.raises(IndexFormatError):
            load(path)

    def test_missing_file_rejected(self, tmp_path):
        with pytest.raises(IndexFormatError):
            load(tmp_path / "absent.rackidx")


class TestLookup:
    def test_fixture_hash_counts(self, fixture_index):
        assert fixture_index.lookup("hash") == {
            "MessageDigest": 3,
            "String": 2,
            "File": 1,
        }

    def test_unknown_keyword(self, fixture_index):
        assert fixture_index.lookup("zzz") == {}

    def test_lookup_never_mutates(self, fixture_index):
        first = fixture_index.lookup("hash")
        first["MessageDigest"] = 999
        first["Bogus"] = 1
        assert fixture_index.lookup("hash") == {
            "MessageDigest": 3,
            "String": 2,
            "File": 1,
        }


class TestTopApis:
    def test_fixture_top_2(self, fixture_index):
        assert fixture_index.top_apis("hash", 2) == [("MessageDigest", 3), ("String", 2)]

    def test_m_saturates(self, fixture_index):
        assert fixture_index.top_apis("hash", 99) == [
            ("MessageDigest", 3),
            ("String", 2),
            ("File", 1),
        ]

    def test_tie_breaks_lexicographically(self):
        index = make_index({"k": {"Beta": 2, "Alpha": 2, "Gamma": 3}})
        assert index.top_apis("k", 3) == [("Gamma", 3), ("Alpha", 2), ("Beta", 2)]

    def test_m_must_be_positive(self, fixture_index):
        with pytest.raises(ValueError):
            fixture_index.top_apis("hash", 0)

    @given(entries=INDEXES, m=st.integers(min_value=1, max_value=8))
    @settings(max_examples=60, deadline=None)
    def test_prefix_property(self, entries, m):
        index = make_index(entries)
        for keyword in index.vocabulary:
            shorter = index.top_apis(keyword, m)
            longer = index.top_apis(keyword, m + 1)
            assert longer[: len(shorter)] == shorter
