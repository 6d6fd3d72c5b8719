"""OFDM Peak-to-Average Power Ratio"""
import logging
from dataclasses import dataclass

import numpy as np

from src.errors import InputError

logger = logging.getLogger(__name__)

DEFAULT_OVERSAMPLE = 16
DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class PaprResult:
    """Grid maximum of |s(t)|^2 / N"""
    papr: float
    peak_position: float
    oversample: int

    @property
    def papr_db(self):
        return 10 * np.log10(self.papr)


def papr(seq, oversample=DEFAULT_OVERSAMPLE):
    """PAPR of s(t) = sum_k a_k exp(2 pi i k t) sampled at t = j / (oversample * N)"""
    if seq is None or len(seq) == 0:
        raise InputError("PAPR of an empty sequence")
    if oversample < 1:
        raise InputError(f"oversample must be >= 1, got {oversample}")
    n = len(seq)
    grid = oversample * n
    # ifft(x, L) * L evaluates sum_k x_k exp(2 pi i k j / L)
    signal = np.fft.ifft(seq.to_complex(), grid) * grid
    power = np.abs(signal) ** 2
    peak = int(np.argmax(power))
    return PaprResult(float(power[peak] / n), peak / grid, oversample)


def papr_of_set(cs, oversample=DEFAULT_OVERSAMPLE):
    """PaprResult for every row of a set"""
    return [papr(row, oversample) for row in cs.rows]


class PaprAnalyzer:
    """Per-row PAPR of a set, checked against the set-size bound"""

    def __init__(self, config=None):
        config = config or {}
        self.oversample = int(config.get('oversample', DEFAULT_OVERSAMPLE))
        self.tolerance = float(config.get('tolerance', DEFAULT_TOLERANCE))

    def within_bound(self, value, set_size):
        """One-sided check with absolute slack"""
        return value <= set_size + self.tolerance

    def analyze(self, cs, oversample=None):
        """One record per row; the bound is the set size"""
        if oversample is None:
            oversample = self.oversample
        records = []
        for index, result in enumerate(papr_of_set(cs, oversample)):
            records.append({
                'row': index,
                'papr': result.papr,
                'papr_db': result.papr_db,
                'peak_position': result.peak_position,
                'oversample': oversample,
                'bound': cs.size,
                'within_bound': self.within_bound(result.papr, cs.size),
            })
        worst = max(r['papr'] for r in records)
        logger.debug(f"PAPR of {cs.size}x{cs.length} set: worst {worst:.6f}, bound {cs.size}")
        return records
