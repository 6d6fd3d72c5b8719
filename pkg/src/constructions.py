"""Complementary Set Constructions

Size-4 sets of length M+N from two Golay pairs, size-8 sets of length M+P
from a pair and a size-4 set, vertical stacking, and the two classical pair
compositions (doubling and the Turyn product) used to reach composite
pair lengths.
"""
import itertools
import logging
from dataclasses import astuple, dataclass

from src.algebra import concat, conjugate, negate, reverse, scale
from src.errors import AdmissibilityError, InputError, VerificationError
from src.verification import ComplementarySet, certify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientTuple4:
    """Exponents of x0, x1, y0, y1 in U_q"""
    x0: int
    x1: int
    y0: int
    y1: int

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        values = tuple(int(v) for v in value)
        if len(values) != 4:
            raise InputError(f"expected 4 coefficients x0,x1,y0,y1, got {len(values)}")
        return cls(*values)

    def violations(self, q):
        """Violated identities, empty when admissible"""
        half = q // 2
        if (self.x0 - self.y0) % q != (self.x1 - self.y1 + half) % q:
            return ["x0*conj(y0) + x1*conj(y1) != 0"]
        return []


@dataclass(frozen=True)
class CoefficientTuple8:
    """Exponents of x0, x1, x2, x3, y0, y1 in U_q"""
    x0: int
    x1: int
    x2: int
    x3: int
    y0: int
    y1: int

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        values = tuple(int(v) for v in value)
        if len(values) != 6:
            raise InputError(f"expected 6 coefficients x0,x1,x2,x3,y0,y1, got {len(values)}")
        return cls(*values)

    def violations(self, q):
        half = q // 2
        failed = []
        if (self.x0 - self.y0) % q != (self.x2 - self.y1 + half) % q:
            failed.append("x0*conj(y0) + x2*conj(y1) != 0")
        if (self.x1 - self.y0) % q != (self.x3 - self.y1 + half) % q:
            failed.append("x1*conj(y0) + x3*conj(y1) != 0")
        return failed


def check_admissible(coeffs, q):
    """Raise AdmissibilityError unless coeffs satisfy their identities over U_q"""
    values = astuple(coeffs)
    if q % 2:
        raise AdmissibilityError(f"q={q} is odd, -1 is not in U_q so no tuple is admissible", values)
    for v in values:
        if not 0 <= v < q:
            raise AdmissibilityError(f"exponent {v} outside [0, {q})", values)
    failed = coeffs.violations(q)
    if failed:
        raise AdmissibilityError(" and ".join(failed), values)


def is_admissible(coeffs, q):
    try:
        check_admissible(coeffs, q)
    except AdmissibilityError:
        return False
    return True


def default_coeffs4(q):
    """(1, 1, 1, -1)"""
    return CoefficientTuple4(0, 0, 0, q // 2)


def default_coeffs8(q):
    """(1, -1, -1, 1, 1, 1)"""
    half = q // 2
    return CoefficientTuple8(0, half, half, 0, 0, 0)


def admissible_coeffs4(q):
    """Every admissible (x0, x1, y0, y1); y1 is fixed by the other three"""
    if q % 2:
        return []
    half = q // 2
    return [CoefficientTuple4(x0, x1, y0, (x1 - x0 + y0 + half) % q)
            for x0, x1, y0 in itertools.product(range(q), repeat=3)]


def admissible_coeffs8(q):
    """Every admissible tuple; x2 and x3 are fixed by the rest"""
    if q % 2:
        return []
    half = q // 2
    return [CoefficientTuple8(x0, x1, (x0 - y0 + y1 + half) % q, (x1 - y0 + y1 + half) % q, y0, y1)
            for x0, x1, y0, y1 in itertools.product(range(q), repeat=4)]


def _require_verified(cs, size, what):
    if not isinstance(cs, ComplementarySet):
        raise InputError(f"{what} must be a complementary set")
    if cs.size != size:
        raise InputError(f"{what} must have {size} rows, got {cs.size}")
    if not cs.verified:
        raise VerificationError(f"{what} has not been verified")


def _require_same_alphabet(first, second):
    if first.alphabet != second.alphabet:
        raise InputError(f"alphabet mismatch (q={first.q} vs q={second.q})")


def construct_theorem1(pair_a, pair_b, coeffs):
    """Size-4 set of length M+N from pairs (a, b) and (c, d)"""
    _require_verified(pair_a, 2, 'pair A')
    _require_verified(pair_b, 2, 'pair B')
    _require_same_alphabet(pair_a, pair_b)
    coeffs = CoefficientTuple4.coerce(coeffs)
    check_admissible(coeffs, pair_a.q)

    a, b = pair_a.rows
    c, d = pair_b.rows
    rows = (
        concat(scale(a, coeffs.x0), scale(c, coeffs.y0)),
        concat(scale(b, coeffs.x0), scale(d, coeffs.y0)),
        concat(scale(a, coeffs.x1), scale(c, coeffs.y1)),
        concat(scale(b, coeffs.x1), scale(d, coeffs.y1)),
    )
    result = certify(ComplementarySet.from_rows(rows), what='theorem 1 output')
    logger.debug(f"theorem 1: M={len(a)} N={len(c)} q={pair_a.q} coeffs={astuple(coeffs)}")
    return result


def construct_theorem2(pair, set_b, coeffs):
    """Size-8 set of length M+P from a pair and a size-4 set"""
    _require_verified(pair, 2, 'pair')
    _require_verified(set_b, 4, 'size-4 set')
    _require_same_alphabet(pair, set_b)
    coeffs = CoefficientTuple8.coerce(coeffs)
    check_admissible(coeffs, pair.q)

    a, b = pair.rows
    e, f, g, h = set_b.rows
    c = coeffs
    rows = (
        concat(scale(a, c.x0), scale(e, c.y0)),
        concat(scale(b, c.x0), scale(f, c.y0)),
        concat(scale(a, c.x1), scale(g, c.y0)),
        concat(scale(b, c.x1), scale(h, c.y0)),
        concat(scale(a, c.x2), scale(e, c.y1)),
        concat(scale(b, c.x2), scale(f, c.y1)),
        concat(scale(a, c.x3), scale(g, c.y1)),
        concat(scale(b, c.x3), scale(h, c.y1)),
    )
    result = certify(ComplementarySet.from_rows(rows), what='theorem 2 output')
    logger.debug(f"theorem 2: M={len(a)} P={len(e)} q={pair.q} coeffs={astuple(coeffs)}")
    return result


def stack(sets):
    """Vertical concatenation of verified sets sharing length and alphabet"""
    sets = list(sets)
    if not sets:
        raise InputError("stack needs at least one set")
    first = sets[0]
    for index, cs in enumerate(sets):
        if not cs.verified:
            raise VerificationError(f"set {index} has not been verified")
        _require_same_alphabet(first, cs)
        if cs.length != first.length:
            raise InputError(f"set {index} has length {cs.length}, expected {first.length}")
    rows = tuple(row for cs in sets for row in cs.rows)
    return certify(ComplementarySet.from_rows(rows), what='stack')


def golay_double(pair):
    """(a || b, a || -b), a pair of twice the length"""
    _require_verified(pair, 2, 'pair')
    a, b = pair.rows
    rows = (concat(a, b), concat(a, negate(b)))
    return certify(ComplementarySet.from_rows(rows), what='doubled pair')


def turyn_product(pair_a, pair_b):
    """Pair of length M*N from a binary pair of length M and a pair of length N

    Block k of the output is c or the conjugate-reverse of d, signed by a_k,
    depending on whether a_k and b_k agree.
    """
    _require_verified(pair_a, 2, 'pair A')
    _require_verified(pair_b, 2, 'pair B')
    a, b = pair_a.rows
    if not (a.is_binary_valued() and b.is_binary_valued()):
        raise InputError("turyn product needs a binary first pair")
    half = pair_b.alphabet.half
    if half is None:
        raise InputError(f"turyn product needs even q, got q={pair_b.q}")

    q = pair_b.q
    c, d = pair_b.rows
    c_tilde = conjugate(reverse(c))
    d_tilde = conjugate(reverse(d))
    e_blocks, f_blocks = [], []
    for ak, bk in zip(a.exponents, b.exponents):
        sign = half if ak else 0
        if (ak != 0) == (bk != 0):
            e_blocks.append(scale(c, sign))
            f_blocks.append(scale(d, sign))
        else:
            e_blocks.append(scale(d_tilde, sign))
            f_blocks.append(scale(c_tilde, (sign + half) % q))
    rows = (concat(*e_blocks), concat(*f_blocks))
    return certify(ComplementarySet.from_rows(rows), what='turyn product')
