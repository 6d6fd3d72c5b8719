"""Constructible Length Enumeration

Lengths are enumerated from the Golay-pair existence patterns; whether the
toolkit can physically build a given length is a separate question answered
against the seed database.
"""
import logging
from dataclasses import dataclass, field

from src.constructions import (admissible_coeffs4, admissible_coeffs8, construct_theorem1,
                               construct_theorem2, default_coeffs4, default_coeffs8, stack)
from src.errors import InputError

logger = logging.getLogger(__name__)

SUPPORTED_Q = (2, 4)
PATTERNS = {2: '2^α10^β26^γ', 4: '2^(α+u)3^β5^γ11^η13^ζ'}

TABLE1_MAX = 34
# Printed rows of the table of non-power-of-two lengths, keyed by (q, set size)
TABLE1 = {
    (2, 4): (3, 4, 5, 6, 8, 9, 10, 11, 12, 14, 16, 17, 18, 20, 21, 22, 24, 26, 27, 28, 30, 33, 34),
    (4, 4): tuple(range(3, 35)),
    (2, 8): tuple(range(3, 35)),
    (4, 8): tuple(range(3, 35)),
}

CONSTRUCTIVE = 'constructive'
EXISTENCE_ONLY = 'existence-only'


@dataclass(frozen=True)
class LengthFactorization:
    """Exponents of one pattern factorization"""
    q: int
    alpha: int
    beta: int
    gamma: int
    eta: int = 0
    zeta: int = 0
    u: int = 0

    @property
    def length(self):
        if self.q == 2:
            return 2 ** self.alpha * 10 ** self.beta * 26 ** self.gamma
        return (2 ** (self.alpha + self.u) * 3 ** self.beta * 5 ** self.gamma
                * 11 ** self.eta * 13 ** self.zeta)


def _check_q(q):
    if q not in SUPPORTED_Q:
        raise InputError(f"unsupported q={q}, expected one of {SUPPORTED_Q}")


def _powers(base, limit):
    """Exponents k >= 0 with base**k <= limit"""
    k, value = 0, 1
    while value <= limit:
        yield k
        k += 1
        value *= base


def gcp_factorizations(q, max_length):
    """Map each pattern length <= max_length to its factorizations"""
    _check_q(q)
    if max_length < 1:
        raise InputError("max length must be >= 1")
    found = {}

    def keep(fact):
        if fact.length <= max_length:
            found.setdefault(fact.length, []).append(fact)

    if q == 2:
        for alpha in _powers(2, max_length):
            for beta in _powers(10, max_length):
                for gamma in _powers(26, max_length):
                    keep(LengthFactorization(2, alpha, beta, gamma))
        return found

    for alpha in _powers(2, max_length):
        for u in _powers(2, max_length // 2 ** alpha):
            for beta in _powers(3, max_length):
                for gamma in _powers(5, max_length):
                    for eta in _powers(11, max_length):
                        for zeta in _powers(13, max_length):
                            if beta + gamma + eta + zeta > alpha + 2 * u + 1 or u > gamma + zeta:
                                continue
                            keep(LengthFactorization(4, alpha, beta, gamma, eta, zeta, u))
    return found


def gcp_lengths(q, max_length):
    """Sorted Golay-pair lengths <= max_length allowed by the existence pattern"""
    return sorted(gcp_factorizations(q, max_length))


def is_gcp_length(q, length):
    return length >= 1 and length in gcp_factorizations(q, length)


@dataclass(frozen=True)
class Derivation:
    """How a length arises: ('theorem1', (M, N)), ('theorem2', (M, P)) or ('stack', (L, L))"""
    kind: str
    operands: tuple

    def __str__(self):
        sep = {'theorem1': '+', 'theorem2': '+', 'stack': '|'}[self.kind]
        return f"{self.kind}({sep.join(str(o) for o in self.operands)})"


@dataclass
class ReachabilitySet:
    """Lengths reachable for one (q, set size), each with its derivations"""
    q: int
    set_size: int
    max_length: int
    derivations: dict = field(default_factory=dict)

    def add(self, length, derivation):
        self.derivations.setdefault(length, []).append(derivation)

    @property
    def lengths(self):
        return sorted(self.derivations)

    def __contains__(self, length):
        return length in self.derivations

    def __len__(self):
        return len(self.derivations)

    def witnesses(self, length):
        """All recorded derivations, as operand tuples"""
        return [d.operands for d in self.derivations.get(length, [])]

    def witness(self, length):
        """First recorded derivation's operands"""
        return self.derivations[length][0].operands

    def to_records(self):
        return [{'length': length, 'derivations': [str(d) for d in self.derivations[length]]}
                for length in self.lengths]


def cs4_lengths(q, max_length):
    """Lengths M+N of size-4 sets from pairs of pattern lengths M <= N"""
    gcps = gcp_lengths(q, max_length)
    result = ReachabilitySet(q, 4, max_length)
    for m in gcps:
        for n in gcps:
            if m <= n and m + n <= max_length:
                result.add(m + n, Derivation('theorem1', (m, n)))
    for length in result.derivations:
        result.derivations[length].sort(key=lambda d: d.operands)
    return result


def cs8_lengths(q, max_length):
    """Lengths M+P from a pair and a size-4 set, plus stacked size-4 lengths"""
    gcps = gcp_lengths(q, max_length)
    cs4 = cs4_lengths(q, max_length)
    result = ReachabilitySet(q, 8, max_length)
    for m in gcps:
        for p in cs4.lengths:
            if m + p <= max_length:
                result.add(m + p, Derivation('theorem2', (m, p)))
    for length in cs4.lengths:
        result.add(length, Derivation('stack', (length, length)))
    return result


def reachability_set(q, set_size, max_length):
    """Dispatch on set size; multiples of 4 and 8 reuse the base lengths"""
    if set_size >= 8 and set_size % 8 == 0:
        return cs8_lengths(q, max_length)
    if set_size >= 4 and set_size % 4 == 0:
        return cs4_lengths(q, max_length)
    raise InputError(f"set size must be a multiple of 4, got {set_size}")


def table1_diff(q, set_size, max_length=TABLE1_MAX):
    """Compare the computed lengths with the printed table row"""
    if (q, set_size) not in TABLE1:
        raise InputError(f"no printed row for q={q}, set size {set_size}")
    limit = min(max_length, TABLE1_MAX)
    printed = {length for length in TABLE1[(q, set_size)] if length <= limit}
    computed = {length for length in reachability_set(q, set_size, limit).lengths}
    return {'missing': sorted(printed - computed), 'extra': sorted(computed - printed)}


class CoverageChecker:
    """Labels reachable lengths constructive or existence-only and builds them"""

    def __init__(self, seeds):
        self.seeds = seeds
        self._cs4_cache = {}

    def _gcp_ok(self, q, length):
        return self.seeds.gcp_for_length(q, length).available

    def _constructive(self, q, derivation, cs4):
        if derivation.kind == 'theorem1':
            return all(self._gcp_ok(q, n) for n in derivation.operands)
        if derivation.kind == 'theorem2':
            m, p = derivation.operands
            return self._gcp_ok(q, m) and self.constructive_witness(q, 4, p, cs4) is not None
        return self.constructive_witness(q, 4, derivation.operands[0], cs4) is not None

    def constructive_witness(self, q, set_size, length, reach=None):
        """First derivation whose operands the seed database can realize"""
        if reach is None:
            reach = reachability_set(q, set_size, length)
        cs4 = reach if reach.set_size == 4 else cs4_lengths(q, reach.max_length)
        for derivation in reach.derivations.get(length, []):
            if self._constructive(q, derivation, cs4):
                return derivation
        return None

    def coverage(self, q, set_size, max_length):
        """[(length, label, derivation)] for every reachable length"""
        reach = reachability_set(q, set_size, max_length)
        rows = []
        for length in reach.lengths:
            witness = self.constructive_witness(q, set_size, length, reach)
            if witness is None:
                rows.append((length, EXISTENCE_ONLY, reach.derivations[length][0]))
            else:
                rows.append((length, CONSTRUCTIVE, witness))
        return rows

    def _pair(self, q, length):
        return self.seeds.gcp_for_length(q, length).pair

    def _build_cs4(self, q, length):
        if (q, length) in self._cs4_cache:
            return self._cs4_cache[(q, length)]
        witness = self.constructive_witness(q, 4, length)
        if witness is None:
            raise InputError(f"no construction path for a size-4 set of length {length} over q={q}")
        m, n = witness.operands
        cs = construct_theorem1(self._pair(q, m), self._pair(q, n), default_coeffs4(q))
        self._cs4_cache[(q, length)] = (cs, witness)
        return cs, witness

    def realize(self, q, set_size, length):
        """Build a verified set of the requested size and length"""
        reach = reachability_set(q, set_size, length)
        if length not in reach:
            raise InputError(f"length {length} is not reachable for set size {set_size} over q={q}")
        copies = set_size // (8 if reach.set_size == 8 else 4)

        if reach.set_size == 4:
            cs, witness = self._build_cs4(q, length)
            m, n = witness.operands
            tuples = admissible_coeffs4(q)
            parts = [cs] + [construct_theorem1(self._pair(q, m), self._pair(q, n), tuples[i % len(tuples)])
                            for i in range(1, copies)]
        else:
            witness = self.constructive_witness(q, 8, length, reach)
            if witness is None:
                raise InputError(f"no construction path for a size-8 set of length {length} over q={q}")
            if witness.kind == 'stack':
                base, _ = self._build_cs4(q, length)
                unit = stack([base, base])
                parts = [unit] * copies
            else:
                m, p = witness.operands
                inner, _ = self._build_cs4(q, p)
                tuples = [default_coeffs8(q)] + admissible_coeffs8(q)
                parts = [construct_theorem2(self._pair(q, m), inner, tuples[i % len(tuples)])
                         for i in range(copies)]

        cs = parts[0] if len(parts) == 1 else stack(parts)
        logger.info(f"Realized size-{cs.size} set of length {length} over q={q} via {witness}")
        return cs, witness
