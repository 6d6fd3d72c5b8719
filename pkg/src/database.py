"""Seed Pair Database"""
import logging
from dataclasses import dataclass, field
from pathlib import Path

from src.constructions import golay_double, turyn_product
from src.errors import CompSetError, InputError, SeedDataError
from src.formats import parse_text, serialize_text
from src.reachability import PATTERNS, SUPPORTED_Q, is_gcp_length
from src.verification import ComplementarySet, certify

logger = logging.getLogger(__name__)

PROVENANCES = ('paper-example', 'derived-search', 'literature')
NO_PATH = "length reachable in principle, no construction path available"


@dataclass(frozen=True)
class SeedRecord:
    """A primitive Golay pair loaded from disk"""
    q: int
    length: int
    pair: ComplementarySet
    provenance: str
    source: str = ''
    path: str = ''
    citation: str = ''

    def to_record(self):
        return {
            'q': self.q,
            'length': self.length,
            'provenance': self.provenance,
            'source': self.source,
            'citation': self.citation,
            'rows': [list(r) for r in self.pair.exponent_rows()],
        }


@dataclass(frozen=True)
class GcpResult:
    """A composed pair with its derivation chain, or the reason there is none"""
    q: int
    length: int
    pair: ComplementarySet = None
    chain: tuple = field(default_factory=tuple)
    reason: str = None

    @property
    def available(self):
        return self.pair is not None


def _parse_note(note):
    fields = {}
    for line in (note or '').splitlines():
        key, sep, value = line.partition(':')
        if sep:
            fields[key.strip()] = value.strip()
    return fields


class SeedDatabase:
    """Verified-on-load catalog of primitive Golay pairs"""

    def __init__(self, seeds_path='data/seeds', preload=True):
        self.seeds_path = Path(seeds_path)
        if not self.seeds_path.is_dir():
            raise SeedDataError(f"seed directory not found: {self.seeds_path}")
        self._records = {}
        self._composed = {}
        if preload:
            for q in SUPPORTED_Q:
                self.load_seeds(q)
        logger.info(f"Seed database initialized: {self.seeds_path}")

    def _read_record(self, q, path):
        try:
            cs = parse_text(path.read_text(encoding='utf-8'), source=str(path))
        except CompSetError as e:
            raise SeedDataError(str(e), seed=path.name)
        if cs.q != q or cs.size != 2:
            raise SeedDataError(f"expected a q={q} pair, found q={cs.q} with {cs.size} rows", seed=path.name)
        fields = _parse_note(cs.note)
        provenance = fields.get('provenance')
        if provenance not in PROVENANCES:
            raise SeedDataError(f"unknown provenance {provenance!r}", seed=path.name)
        try:
            pair = certify(cs, what=f"seed {path.name}")
        except CompSetError as e:
            raise SeedDataError(str(e), seed=path.name)
        return SeedRecord(q, cs.length, pair, provenance, fields.get('source', ''), str(path),
                          citation=fields.get('citation', ''))

    def load_seeds(self, q):
        """All verified seed records for q, sorted by length"""
        if q not in SUPPORTED_Q:
            raise InputError(f"no seeds for q={q}, expected one of {SUPPORTED_Q}")
        if q not in self._records:
            directory = self.seeds_path / f"q{q}"
            files = sorted(directory.glob('*.txt')) if directory.is_dir() else []
            if not files:
                raise SeedDataError(f"no seed files in {directory}")
            records = sorted((self._read_record(q, path) for path in files), key=lambda r: r.length)
            self._records[q] = records
            logger.info(f"Loaded {len(records)} q={q} seeds: lengths {[r.length for r in records]}")
        return list(self._records[q])

    def seed(self, q, length):
        for record in self.load_seeds(q):
            if record.length == length:
                return record
        return None

    def list_records(self, q=None):
        qs = SUPPORTED_Q if q is None else (q,)
        return [record for each in qs for record in self.load_seeds(each)]

    def _binary_seed(self, q, length):
        if q == 2 or q % 2:
            return None
        record = self.seed(2, length)
        if record is None:
            return None
        rows = [row.embed(q) for row in record.pair.rows]
        pair = certify(ComplementarySet.from_rows(rows), what=f"embedded seed {length}")
        return pair, (f"seed {length} (binary {record.provenance}, embedded into q={q})",)

    def _compose(self, q, length):
        """(pair, chain) built from seeds, or None"""
        key = (q, length)
        if key in self._composed:
            return self._composed[key]

        result = None
        record = self.seed(q, length)
        if record is not None:
            result = (record.pair, (f"seed {length} ({record.provenance})",))
        if result is None and length % 2 == 0:
            half = self._compose(q, length // 2)
            if half is not None:
                result = (golay_double(half[0]), half[1] + (f"double {length // 2} -> {length}",))
        if result is None:
            for m in range(2, length):
                if length % m:
                    continue
                binary = self._compose(2, m)
                other = self._compose(q, length // m) if binary is not None else None
                if other is not None:
                    pair = turyn_product(binary[0], other[0])
                    chain = binary[1] + other[1] + (f"turyn {m} x {length // m} -> {length}",)
                    result = (pair, chain)
                    break
        if result is None:
            result = self._binary_seed(q, length)

        self._composed[key] = result
        return result

    def gcp_for_length(self, q, length):
        """Compose a verified pair of the given length, or explain why not"""
        if q not in SUPPORTED_Q:
            return GcpResult(q, length, reason=f"no seeds for q={q}")
        if length < 1:
            return GcpResult(q, length, reason="length must be >= 1")
        if not is_gcp_length(q, length):
            return GcpResult(q, length, reason=f"{length} ∉ {PATTERNS[q]}")
        composed = self._compose(q, length)
        if composed is None:
            logger.debug(f"q={q} length {length}: {NO_PATH}")
            return GcpResult(q, length, reason=NO_PATH)
        pair, chain = composed
        return GcpResult(q, length, pair=pair, chain=chain)


def regenerate_derived_seeds(seeds_path, engine, lengths=(3, 5), q=4):
    """Rewrite the searched quaternary seed files from the oracle's first canonical pair"""
    directory = Path(seeds_path) / f"q{q}"
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for length in lengths:
        found = engine.search_gcp(q, length, limit=1)
        if not found.sets:
            raise SeedDataError(f"search found no q={q} pair of length {length}")
        pair = found.sets[0]
        note = "provenance: derived-search\nsource: exhaustive search, canonical form"
        path = directory / f"n{length:02d}.txt"
        path.write_text(serialize_text(ComplementarySet.from_rows(pair.rows, note=note)),
                        encoding='utf-8', newline='\n')
        logger.info(f"Wrote derived seed {path}")
        written.append(path)
    return written
