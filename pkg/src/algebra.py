"""Root-of-Unity Sequence Algebra

Sequences over U_q are stored as integer exponents mod q. Aperiodic
correlations are accumulated as exponent counts and reduced modulo the q-th
cyclotomic polynomial, so every correlation value is an exact element of
Z[zeta_q]. For q in {1, 2, 4} the reduced coordinates are plain Gaussian
integers.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from src.errors import InputError

logger = logging.getLogger(__name__)

_X = sympy.Symbol('x')

GAUSSIAN_ORDERS = (1, 2, 4)


@lru_cache(maxsize=None)
def cyclotomic_coeffs(q):
    """Coefficients of the q-th cyclotomic polynomial, lowest degree first"""
    poly = sympy.Poly(sympy.cyclotomic_poly(q, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def reduce_counts(q, counts):
    """Reduce sum(counts[t] * zeta^t) to coordinates over 1, zeta, ..., zeta^(phi(q)-1)"""
    phi = cyclotomic_coeffs(q)
    degree = len(phi) - 1
    coeffs = [int(c) for c in counts]
    if len(coeffs) < degree:
        coeffs.extend([0] * (degree - len(coeffs)))
    # phi is monic, so each step clears the leading coefficient exactly
    for i in range(len(coeffs) - 1, degree - 1, -1):
        lead = coeffs[i]
        if lead:
            for j in range(degree + 1):
                coeffs[i - degree + j] -= lead * phi[j]
    return tuple(coeffs[:degree])


@dataclass(frozen=True)
class Alphabet:
    """The group U_q of q-th roots of unity"""
    q: int

    def __post_init__(self):
        if isinstance(self.q, bool) or not isinstance(self.q, (int, np.integer)) or self.q < 1:
            raise InputError(f"alphabet order must be a positive integer, got {self.q!r}")
        object.__setattr__(self, 'q', int(self.q))

    @property
    def half(self):
        """Exponent of -1, or None when q is odd"""
        return self.q // 2 if self.q % 2 == 0 else None

    @property
    def gaussian(self):
        return self.q in GAUSSIAN_ORDERS

    def root(self, t):
        """Complex value of exponent t (display and float checks only)"""
        return np.exp(2j * np.pi * (np.asarray(t) % self.q) / self.q)


@dataclass(frozen=True)
class Sequence:
    """A length-N sequence over U_q, held as exponents"""
    alphabet: Alphabet
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise InputError("sequence must have length >= 1")
        q = self.alphabet.q
        for position, e in enumerate(exps):
            if not 0 <= e < q:
                raise InputError(f"exponent {e} at position {position} outside [0, {q})")
        object.__setattr__(self, 'exponents', exps)

    @classmethod
    def of(cls, exponents, q):
        """Build from raw exponents, reducing them mod q"""
        return cls(Alphabet(q), tuple(int(e) % q for e in exponents))

    @property
    def q(self):
        return self.alphabet.q

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    @property
    def array(self):
        return np.array(self.exponents, dtype=np.int64)

    def to_complex(self):
        return self.alphabet.root(self.array)

    def embed(self, q):
        """Lift into U_q for a multiple q of the current order"""
        if q == self.q:
            return self
        if q % self.q:
            raise InputError(f"cannot embed U_{self.q} into U_{q}")
        factor = q // self.q
        return Sequence(Alphabet(q), tuple(e * factor for e in self.exponents))

    def is_binary_valued(self):
        """True when every entry is +1 or -1"""
        half = self.alphabet.half
        if self.q == 1:
            return True
        return half is not None and all(e in (0, half) for e in self.exponents)


def _check_alphabet(a, b, what):
    if a.alphabet != b.alphabet:
        raise InputError(f"{what}: alphabet mismatch (q={a.q} vs q={b.q})")


def scale(a, u):
    """Multiply every element by zeta^u"""
    if not 0 <= int(u) < a.q:
        raise InputError(f"scale exponent {u} outside [0, {a.q})")
    return Sequence(a.alphabet, tuple((e + int(u)) % a.q for e in a.exponents))


def negate(a):
    """Multiply by -1; needs even q"""
    if a.alphabet.half is None:
        raise InputError(f"-1 is not in U_{a.q}")
    return scale(a, a.alphabet.half)


def reverse(a):
    return Sequence(a.alphabet, a.exponents[::-1])


def conjugate(a):
    return Sequence(a.alphabet, tuple((-e) % a.q for e in a.exponents))


def concat(*parts):
    """Horizontal concatenation a || b || ..."""
    if not parts:
        raise InputError("concat needs at least one sequence")
    for part in parts[1:]:
        _check_alphabet(parts[0], part, 'concat')
    return Sequence(parts[0].alphabet, sum((p.exponents for p in parts), ()))


def prefix(a, m):
    """First m elements of a"""
    if not 1 <= m <= len(a):
        raise InputError(f"prefix length {m} outside [1, {len(a)}]")
    return Sequence(a.alphabet, a.exponents[:m])


@dataclass(frozen=True)
class CorrelationValue:
    """Exact element of Z[zeta_q] in cyclotomic coordinates"""
    q: int
    coords: tuple

    @classmethod
    def from_counts(cls, q, counts):
        return cls(q, reduce_counts(q, counts))

    @classmethod
    def from_exponents(cls, q, exponents):
        """Sum of zeta^e over the given exponents"""
        exps = np.mod(np.asarray(exponents, dtype=np.int64), q)
        return cls.from_counts(q, np.bincount(exps, minlength=q))

    @classmethod
    def from_int(cls, q, n):
        counts = [0] * q
        counts[0] = int(n)
        return cls.from_counts(q, counts)

    @classmethod
    def zero(cls, q):
        return cls.from_int(q, 0)

    def is_zero(self):
        return not any(self.coords)

    def _lift(self, shift=0, sign=1):
        counts = [0] * self.q
        for t, c in enumerate(self.coords):
            counts[(sign * t + shift) % self.q] += c
        return CorrelationValue.from_counts(self.q, counts)

    def conjugate(self):
        return self._lift(sign=-1)

    def rotate(self, u):
        """Multiply by zeta^u"""
        return self._lift(shift=int(u))

    def _check(self, other):
        if not isinstance(other, CorrelationValue) or other.q != self.q:
            raise InputError("correlation values from different alphabets")

    def __add__(self, other):
        self._check(other)
        return CorrelationValue(self.q, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return CorrelationValue(self.q, tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-other)

    @property
    def gaussian(self):
        """Exact (re, im) integer pair; only defined for q in {1, 2, 4}"""
        if self.q not in GAUSSIAN_ORDERS:
            raise InputError(f"q={self.q} values are not Gaussian integers")
        if self.q == 4:
            return self.coords[0], self.coords[1]
        return self.coords[0], 0

    @property
    def re(self):
        return self.gaussian[0]

    @property
    def im(self):
        return self.gaussian[1]

    def __complex__(self):
        roots = np.exp(2j * np.pi * np.arange(len(self.coords)) / self.q)
        return complex(np.dot(np.array(self.coords, dtype=float), roots))

    def __abs__(self):
        return abs(complex(self))

    def __str__(self):
        if self.q not in GAUSSIAN_ORDERS:
            return f"Z[zeta_{self.q}]{self.coords}"
        re, im = self.gaussian
        if not im:
            return str(re)
        if not re:
            return f"{im}i"
        return f"{re}{im:+d}i"


@dataclass(frozen=True)
class CorrelationProfile:
    """Correlation values over shifts -(N-1) .. N-1"""
    values: tuple
    length_n: int

    def __post_init__(self):
        if len(self.values) != 2 * self.length_n - 1:
            raise InputError("profile must hold 2N-1 values")

    @property
    def q(self):
        return self.values[0].q

    @property
    def shifts(self):
        return range(-(self.length_n - 1), self.length_n)

    def __getitem__(self, tau):
        if abs(tau) >= self.length_n:
            raise IndexError(f"shift {tau} outside profile of length {self.length_n}")
        return self.values[tau + self.length_n - 1]

    def __add__(self, other):
        if other.length_n != self.length_n:
            raise InputError("cannot add profiles of different lengths")
        return CorrelationProfile(
            tuple(x + y for x, y in zip(self.values, other.values)), self.length_n)

    def items(self, nonnegative=False):
        """(shift, value) pairs in shift order"""
        start = 0 if nonnegative else -(self.length_n - 1)
        return [(tau, self[tau]) for tau in range(start, self.length_n)]

    def to_complex(self):
        return np.array([complex(v) for v in self.values])


def accf(a, b):
    """Aperiodic cross-correlation of two equal-length sequences"""
    _check_alphabet(a, b, 'accf')
    if len(a) != len(b):
        raise InputError(f"accf: length mismatch ({len(a)} vs {len(b)})")
    q, n = a.q, len(a)
    x, y = a.array, b.array
    values = []
    for tau in range(-(n - 1), n):
        if tau >= 0:
            diff = x[:n - tau] - y[tau:]
        else:
            diff = x[-tau:] - y[:n + tau]
        values.append(CorrelationValue.from_exponents(q, diff))
    return CorrelationProfile(tuple(values), n)


def aacf(a):
    """Aperiodic auto-correlation"""
    return accf(a, a)
