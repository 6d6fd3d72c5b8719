"""Complementary Set Verification"""
import logging
from dataclasses import dataclass, field, replace

from src.algebra import Alphabet, CorrelationValue, Sequence, aacf
from src.errors import InputError, VerificationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComplementarySet:
    """A P x N stack of sequences over one alphabet"""
    alphabet: Alphabet
    rows: tuple
    verified: bool = False
    note: str = None

    def __post_init__(self):
        rows = tuple(self.rows)
        if not rows:
            raise InputError("a set needs at least one row")
        n = len(rows[0])
        for index, row in enumerate(rows):
            if not isinstance(row, Sequence):
                raise InputError(f"row {index} is not a Sequence")
            if row.alphabet != self.alphabet:
                raise InputError(f"row {index} has q={row.q}, set has q={self.alphabet.q}")
            if len(row) != n:
                raise InputError(f"ragged rows: row {index} has length {len(row)}, expected {n}")
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def from_rows(cls, rows, note=None):
        rows = tuple(rows)
        if not rows:
            raise InputError("a set needs at least one row")
        return cls(rows[0].alphabet, rows, note=note)

    @classmethod
    def from_exponents(cls, rows, q, note=None):
        return cls.from_rows([Sequence.of(r, q) for r in rows], note=note)

    @property
    def q(self):
        return self.alphabet.q

    @property
    def size(self):
        return len(self.rows)

    @property
    def length(self):
        return len(self.rows[0])

    def exponent_rows(self):
        return tuple(row.exponents for row in self.rows)

    def same_rows(self, other):
        """Row-for-row equality, ignoring the verified flag and note"""
        return self.alphabet == other.alphabet and self.exponent_rows() == other.exponent_rows()


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the complementary-set test"""
    is_cs: bool
    sum_profile: object
    first_defect_shift: int = None
    defect_magnitudes: dict = field(default_factory=dict)
    set_size: int = 0
    peak_ok: bool = True

    @property
    def length(self):
        return self.sum_profile.length_n

    @property
    def peak(self):
        return self.sum_profile[0]

    def to_record(self):
        """JSON-ready form, sum profile over shifts 0 .. N-1"""
        return {
            'is_cs': self.is_cs,
            'set_size': self.set_size,
            'length': self.length,
            'peak': str(self.peak),
            'expected_peak': self.set_size * self.length,
            'first_defect_shift': self.first_defect_shift,
            'defect_magnitudes': {str(tau): mag for tau, mag in self.defect_magnitudes.items()},
            'sum_profile': [
                {'shift': tau, 'coords': list(value.coords), 'value': str(value)}
                for tau, value in self.sum_profile.items(nonnegative=True)
            ],
        }


def verify(candidate):
    """Decide whether the rows form a complementary set"""
    total = None
    for row in candidate.rows:
        profile = aacf(row)
        total = profile if total is None else total + profile

    n, size = candidate.length, candidate.size
    peak_ok = total[0] == CorrelationValue.from_int(candidate.q, size * n)
    defects = {}
    for tau in range(1, n):
        if not total[tau].is_zero():
            defects[tau] = abs(total[tau])

    is_cs = peak_ok and not defects
    first = min(defects) if defects else None
    logger.debug(f"verify: P={size} N={n} q={candidate.q} is_cs={is_cs} first_defect={first}")
    return VerificationReport(
        is_cs=is_cs,
        sum_profile=total,
        first_defect_shift=first,
        defect_magnitudes=defects,
        set_size=size,
        peak_ok=peak_ok,
    )


def is_gcp(a, b):
    """True when (a, b) is a Golay complementary pair"""
    return verify(ComplementarySet.from_rows((a, b))).is_cs


def certify(candidate, what='set'):
    """Return the candidate marked verified, or raise VerificationError"""
    report = verify(candidate)
    if not report.is_cs:
        if report.first_defect_shift is not None:
            detail = (f"nonzero correlation sum at shift {report.first_defect_shift} "
                      f"(|sum| = {report.defect_magnitudes[report.first_defect_shift]:g})")
        else:
            detail = f"peak {report.peak} != {candidate.size * candidate.length}"
        raise VerificationError(f"{what} is not a complementary set: {detail}", report)
    return replace(candidate, verified=True)


def golay_pair(a, b, note=None):
    """Verified two-row set from sequences a and b"""
    return certify(ComplementarySet.from_rows((a, b), note=note), what='pair')
