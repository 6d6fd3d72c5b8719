"""Tests for sequence-set file formats"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))
from src.algebra import Sequence
from src.errors import InputError, ParseError
from src.formats import (from_pretty, parse_coeffs, parse_json, parse_text, pretty, read_set,
                         serialize_json, serialize_text, write_set)
from src.verification import ComplementarySet
from tests.conftest import EXAMPLES_DIR, SEEDS_DIR


def test_example_file_round_trip():
    """Test serializing a parsed file gives back the same bytes"""
    text = (EXAMPLES_DIR / 'example2_cs.txt').read_text(encoding='utf-8')
    cs = parse_text(text)
    assert cs.q == 2 and cs.size == 8 and cs.length == 13
    assert serialize_text(cs) == text


def test_note_lines():
    """Test comment lines after the header become the note"""
    cs = read_set(SEEDS_DIR / 'q4' / 'n03.txt')
    assert cs.note.splitlines()[0] == "provenance: derived-search"
    assert cs.exponent_rows() == ((0, 0, 2), (0, 1, 0))
    assert serialize_text(cs).splitlines()[1] == "# provenance: derived-search"


def test_bad_header():
    with pytest.raises(ParseError) as excinfo:
        parse_text("q=2 rows=2\n00\n01\n")
    assert (excinfo.value.line, excinfo.value.column) == (1, 1)


def test_invalid_symbol_position():
    """Test errors point at the offending character"""
    with pytest.raises(ParseError) as excinfo:
        parse_text("q=2 rows=2 len=2\n00\n0x\n", source='bad.txt')
    assert (excinfo.value.line, excinfo.value.column) == (3, 2)
    assert str(excinfo.value).startswith("bad.txt:3:2:")

    with pytest.raises(ParseError) as excinfo:
        parse_text("q=4 rows=1 len=3\n014\n")
    assert (excinfo.value.line, excinfo.value.column) == (2, 3)


def test_short_row_and_missing_rows():
    with pytest.raises(ParseError) as excinfo:
        parse_text("q=2 rows=2 len=3\n000\n00\n")
    assert (excinfo.value.line, excinfo.value.column) == (3, 3)

    with pytest.raises(ParseError) as excinfo:
        parse_text("q=2 rows=3 len=2\n00\n01\n")
    assert excinfo.value.line == 4


def test_parse_error_record():
    with pytest.raises(ParseError) as excinfo:
        parse_text("")
    record = excinfo.value.to_record()
    assert record['error'] == 'parse'
    assert record['line'] == 1


def test_large_alphabet_needs_json():
    cs = ComplementarySet.from_exponents([[0, 11], [0, 5]], q=12)
    with pytest.raises(InputError):
        serialize_text(cs)
    assert parse_json(serialize_json(cs)).same_rows(cs)


def test_json_files(tmp_path):
    """Test JSON is chosen by suffix and by content"""
    cs = read_set(EXAMPLES_DIR / 'example1_cs.txt')
    write_set(cs, tmp_path / 'set.json', fmt='json')
    assert read_set(tmp_path / 'set.json').same_rows(cs)
    (tmp_path / 'set.dat').write_text(serialize_json(cs))
    assert read_set(tmp_path / 'set.dat').same_rows(cs)


def test_bad_json():
    with pytest.raises(ParseError):
        parse_json('{"q": 2, "rows": [[0, 2]]}')
    with pytest.raises(ParseError):
        parse_json('{"rows": [[0]]}')
    with pytest.raises(ParseError):
        parse_json('{"q": 2,')


@pytest.mark.parametrize('rows', [
    '[[0, 1.9, 2.7], [0, 1, 1]]',
    '[[0, 1, 2], [0, "1", 1]]',
    '[[0, 1, 2], [0, true, 1]]',
    '[[0, 1, 2], [0, 1.0, 1]]',
    '[[0, 1, 2], 3]',
    '"012"',
])
def test_json_rejects_non_integer_exponents(rows):
    """Test exponents are never truncated or coerced"""
    with pytest.raises(ParseError) as excinfo:
        parse_json(f'{{"q": 4, "rows": {rows}}}')
    assert excinfo.value.line == 1
    with pytest.raises(ParseError):
        parse_json('{"q": 4.0, "rows": [[0, 1]]}')


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        read_set(tmp_path / 'nope.txt')


def test_pretty_glyphs():
    """Test +, -, i, î rendering and parsing"""
    assert pretty(Sequence.of([0, 0, 2], 4)) == "++-"
    assert pretty(Sequence.of([0, 1, 0, 3], 4)) == "+i+î"
    assert pretty(Sequence.of([0, 1, 1], 2)) == "+--"
    assert from_pretty("+iî-", 4).exponents == (0, 1, 3, 2)
    with pytest.raises(InputError):
        from_pretty("+x", 4)


def test_parse_coeffs():
    """Test exponent and complex literal coefficient strings"""
    assert parse_coeffs("0,0,0,1", 2) == (0, 0, 0, 1)
    assert parse_coeffs("1,1,1,-1", 2, complex_literals=True) == (0, 0, 0, 1)
    assert parse_coeffs("1, i, -i, -1", 4, complex_literals=True) == (0, 1, 3, 2)
    assert parse_coeffs("i,-1", 8, complex_literals=True) == (2, 4)
    with pytest.raises(InputError):
        parse_coeffs("1,i", 2, complex_literals=True)
    with pytest.raises(InputError):
        parse_coeffs("0,a", 4)
