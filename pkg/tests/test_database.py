"""Tests for the seed pair database"""
import shutil
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))
from src.database import NO_PATH, SeedDatabase, regenerate_derived_seeds
from src.errors import InputError, SeedDataError
from src.reachability import gcp_lengths
from src.search import SearchEngine
from src.verification import verify
from tests.conftest import SEEDS_DIR


def test_packaged_seeds_load(seed_db):
    """Test every packaged seed verifies on load"""
    assert [r.length for r in seed_db.load_seeds(2)] == [1, 2, 10, 26]
    assert [r.length for r in seed_db.load_seeds(4)] == [1, 2, 3, 5, 11, 13]
    assert all(r.pair.verified for r in seed_db.list_records())
    assert seed_db.seed(2, 10).provenance == 'paper-example'
    assert seed_db.seed(4, 13).provenance == 'derived-search'
    assert seed_db.seed(4, 7) is None


def test_seed_record_fields(seed_db):
    record = seed_db.seed(4, 3).to_record()
    assert record['rows'] == [[0, 0, 2], [0, 1, 0]]
    assert record['source'] == "exhaustive search, canonical form"
    assert record['citation'] == ''


def test_searched_seeds_cite_literature(seed_db):
    """Test the searched quaternary 11 and 13 seeds carry an existence citation"""
    for length in (11, 13):
        record = seed_db.seed(4, length)
        assert record.provenance == 'derived-search'
        assert "Frank 1980" in record.citation
        assert record.to_record()['citation'] == record.citation


def test_corrupt_seed_is_fatal(tmp_path):
    """Test a seed that fails verification names its file"""
    shutil.copytree(SEEDS_DIR, tmp_path / 'seeds')
    path = tmp_path / 'seeds' / 'q4' / 'n03.txt'
    path.write_text(path.read_text().replace('010\n', '011\n'))
    with pytest.raises(SeedDataError) as excinfo:
        SeedDatabase(tmp_path / 'seeds')
    assert 'n03.txt' in str(excinfo.value)
    assert excinfo.value.exit_code == 2


def test_unknown_provenance(tmp_path):
    shutil.copytree(SEEDS_DIR, tmp_path / 'seeds')
    path = tmp_path / 'seeds' / 'q2' / 'n02.txt'
    path.write_text(path.read_text().replace('derived-search', 'folklore'))
    with pytest.raises(SeedDataError):
        SeedDatabase(tmp_path / 'seeds')


def test_missing_seed_directory(tmp_path):
    with pytest.raises(SeedDataError):
        SeedDatabase(tmp_path / 'absent')


def test_unsupported_q(seed_db):
    with pytest.raises(InputError):
        seed_db.load_seeds(8)
    assert not seed_db.gcp_for_length(8, 4).available


@pytest.mark.parametrize('q, limit', [(2, 34), (4, 40)])
def test_every_pattern_length_composes(seed_db, q, limit):
    """Test composed pairs verify and have the requested length"""
    for length in gcp_lengths(q, limit):
        result = seed_db.gcp_for_length(q, length)
        if not result.available:
            assert result.reason == NO_PATH
            continue
        assert result.pair.length == length
        assert result.pair.q == q
        assert verify(result.pair).is_cs


def test_binary_pattern_lengths_all_available(seed_db):
    """Test every binary pair length up to 64 is built from the packaged seeds"""
    lengths = gcp_lengths(2, 64)
    assert lengths == [1, 2, 4, 8, 10, 16, 20, 26, 32, 40, 52, 64]
    for length in lengths:
        result = seed_db.gcp_for_length(2, length)
        assert result.available, (length, result.reason)
        assert result.pair.length == length
        assert verify(result.pair).is_cs


def test_doubling_chain(seed_db):
    result = seed_db.gcp_for_length(4, 26)
    assert result.chain == ("seed 13 (derived-search)", "double 13 -> 26")


def test_turyn_chain(seed_db):
    """Test length 30 comes from a binary 10 and a quaternary 3"""
    result = seed_db.gcp_for_length(4, 30)
    assert result.chain[-1] == "turyn 10 x 3 -> 30"


def test_doubled_quaternary_seed(seed_db):
    assert seed_db.gcp_for_length(4, 10).chain == ("seed 5 (derived-search)", "double 5 -> 10")


def test_embedded_binary_seed(tmp_path):
    """Test a binary seed is lifted when no quaternary path exists"""
    shutil.copytree(SEEDS_DIR, tmp_path / 'seeds')
    (tmp_path / 'seeds' / 'q4' / 'n05.txt').unlink()
    result = SeedDatabase(tmp_path / 'seeds').gcp_for_length(4, 10)
    assert result.chain == ("seed 10 (binary paper-example, embedded into q=4)",)
    assert result.pair.q == 4 and verify(result.pair).is_cs


def test_unavailable_lengths(seed_db):
    """Test the reason names the pattern or the missing construction"""
    result = seed_db.gcp_for_length(2, 3)
    assert not result.available
    assert result.reason == "3 ∉ 2^α10^β26^γ"
    assert seed_db.gcp_for_length(4, 18).reason == NO_PATH
    assert "∉" in seed_db.gcp_for_length(4, 9).reason


def test_regenerate_derived_seeds(tmp_path):
    """Test searched seeds are written exactly as packaged"""
    written = regenerate_derived_seeds(tmp_path, SearchEngine(), lengths=(3, 5), q=4)
    assert [p.name for p in written] == ['n03.txt', 'n05.txt']
    for path in written:
        assert path.read_text() == (SEEDS_DIR / 'q4' / path.name).read_text()
