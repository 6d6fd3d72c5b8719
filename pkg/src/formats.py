"""Sequence-Set File Formats

Text format:

    q=<int> rows=<int> len=<int>
    # optional note lines
    <row of exponent digits>
    ...

JSON format: {"q": int, "rows": [[int, ...], ...], "note": str or null}
"""
import json
import logging
import re
from pathlib import Path

from src.algebra import Alphabet, Sequence
from src.errors import InputError, ParseError
from src.verification import ComplementarySet

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r'^q=(\d+) rows=(\d+) len=(\d+)$')
MAX_TEXT_Q = 10

# exponent t -> glyph; -i is written î
PRETTY_GLYPHS = {2: '+-', 4: '+i-î'}
COMPLEX_LITERALS = {'1': 0, '-1': 2, 'i': 1, '-i': 3}


def serialize_text(cs):
    if cs.q > MAX_TEXT_Q:
        raise InputError(f"text format holds q <= {MAX_TEXT_Q}, got q={cs.q}")
    lines = [f"q={cs.q} rows={cs.size} len={cs.length}"]
    if cs.note:
        lines.extend(f"# {line}".rstrip() for line in cs.note.splitlines())
    lines.extend(''.join(str(e) for e in row.exponents) for row in cs.rows)
    return '\n'.join(lines) + '\n'


def parse_text(text, source=None):
    """Parse the text format, reporting 1-based line and column on errors"""
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    if not lines:
        raise ParseError("empty file", line=1, column=1, source=source)

    match = HEADER_RE.match(lines[0])
    if not match:
        raise ParseError("expected header 'q=<int> rows=<int> len=<int>'", line=1, column=1, source=source)
    q, size, length = (int(g) for g in match.groups())
    if not 1 <= q <= MAX_TEXT_Q:
        raise ParseError(f"q={q} outside [1, {MAX_TEXT_Q}]", line=1, column=3, source=source)
    if size < 1 or length < 1:
        raise ParseError("rows and len must be >= 1", line=1, column=1, source=source)

    index = 1
    notes = []
    while index < len(lines) and lines[index].startswith('#'):
        notes.append(lines[index][1:].strip())
        index += 1

    data = lines[index:]
    if len(data) != size:
        raise ParseError(f"expected {size} data lines, found {len(data)}",
                         line=index + min(len(data), size) + 1, column=1, source=source)

    rows = []
    for offset, line in enumerate(data):
        line_no = index + offset + 1
        for column, char in enumerate(line, start=1):
            if char not in '0123456789' or int(char) >= q:
                raise ParseError(f"invalid symbol {char!r} for q={q}", line=line_no, column=column, source=source)
        if len(line) != length:
            raise ParseError(f"expected {length} symbols, found {len(line)}",
                             line=line_no, column=min(len(line), length) + 1, source=source)
        rows.append(Sequence(Alphabet(q), tuple(int(c) for c in line)))

    return ComplementarySet.from_rows(rows, note='\n'.join(notes) or None)


def serialize_json(cs):
    return json.dumps({'q': cs.q, 'rows': [list(r) for r in cs.exponent_rows()], 'note': cs.note}) + '\n'


def parse_json(text, source=None):
    try:
        record = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno, source=source)
    if not isinstance(record, dict) or 'q' not in record or 'rows' not in record:
        raise ParseError("expected an object with 'q' and 'rows'", line=1, column=1, source=source)
    q = record['q']
    if type(q) is not int or q < 1:
        raise ParseError(f"invalid q {q!r}", line=1, column=1, source=source)
    if not isinstance(record['rows'], list):
        raise ParseError("'rows' must be an array", line=1, column=1, source=source)
    for index, row in enumerate(record['rows']):
        if not isinstance(row, list):
            raise ParseError(f"row {index} must be an array", line=1, column=1, source=source)
        # bool is an int subclass; floats and strings must not be coerced
        bad = [e for e in row if type(e) is not int]
        if bad:
            raise ParseError(f"row {index}: exponents must be integers, got {bad[0]!r}",
                             line=1, column=1, source=source)
    try:
        rows = [Sequence(Alphabet(q), tuple(row)) for row in record['rows']]
        return ComplementarySet.from_rows(rows, note=record.get('note'))
    except (TypeError, InputError) as e:
        raise ParseError(str(e), line=1, column=1, source=source)


def read_set(path):
    """Load a set from disk, choosing the format by suffix or content"""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except FileNotFoundError:
        raise InputError(f"file not found: {path}")
    if path.suffix == '.json' or text.lstrip().startswith('{'):
        return parse_json(text, source=str(path))
    return parse_text(text, source=str(path))


def write_set(cs, path, fmt='text'):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = serialize_json(cs) if fmt == 'json' else serialize_text(cs)
    path.write_text(payload, encoding='utf-8', newline='\n')
    logger.info(f"Wrote {cs.size}x{cs.length} set to {path}")


def pretty(seq):
    """Render with +, -, i, î glyphs for q in {2, 4}"""
    glyphs = PRETTY_GLYPHS.get(seq.q)
    if glyphs is None:
        return ''.join(str(e) for e in seq.exponents)
    return ''.join(glyphs[e] for e in seq.exponents)


def from_pretty(text, q):
    """Inverse of pretty()"""
    glyphs = PRETTY_GLYPHS.get(q)
    if glyphs is None:
        raise InputError(f"no glyphs for q={q}")
    try:
        return Sequence(Alphabet(q), tuple(glyphs.index(ch) for ch in text))
    except ValueError:
        raise InputError(f"invalid glyph in {text!r} for q={q}")


def parse_coeffs(text, q, complex_literals=False):
    """Comma-separated exponents, or 1,-1,i,-i literals"""
    parts = [p.strip() for p in text.split(',') if p.strip()]
    if not complex_literals:
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise InputError(f"coefficients must be integers: {text!r}")
    if q % 4 and any(p in ('i', '-i') for p in parts):
        raise InputError(f"i is not in U_{q}")
    exps = []
    for p in parts:
        if p not in COMPLEX_LITERALS:
            raise InputError(f"unknown coefficient literal {p!r}")
        if q % 2 and p != '1':
            raise InputError(f"{p} is not in U_{q}")
        exps.append(COMPLEX_LITERALS[p] * q // 4)
    return tuple(exps)
