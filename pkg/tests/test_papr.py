"""Tests for PAPR analysis"""
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))
from src.algebra import Sequence, scale
from src.constructions import golay_double, turyn_product
from src.errors import InputError
from src.formats import read_set
from src.papr import PaprAnalyzer, PaprResult, papr, papr_of_set
from src.reachability import gcp_lengths
from tests.conftest import EXAMPLES_DIR


def test_constant_sequence():
    """Test the all-ones row peaks at t=0 with PAPR N"""
    result = papr(Sequence.of([0] * 7, 2))
    assert result.papr == pytest.approx(7)
    assert result.peak_position == 0.0


def test_single_element():
    assert papr(Sequence.of([3], 4)).papr == pytest.approx(1)


def test_db_conversion():
    assert PaprResult(2.0, 0.0, 16).papr_db == pytest.approx(3.0103, abs=1e-4)


def test_invalid_oversample():
    with pytest.raises(InputError):
        papr(Sequence.of([0, 1], 2), oversample=0)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 4]), st.lists(st.integers(0, 3), min_size=1, max_size=16), st.integers(1, 8))
def test_matches_direct_evaluation(q, exps, oversample):
    """Test the FFT grid equals the direct sum at every sample"""
    seq = Sequence.of(exps, q)
    n = len(seq)
    grid = oversample * n
    t = np.arange(grid) / grid
    signal = np.exp(2j * np.pi * np.outer(t, np.arange(n))) @ seq.to_complex()
    assert papr(seq, oversample).papr == pytest.approx(np.max(np.abs(signal) ** 2) / n)


def test_golay_rows_within_two(seed_db):
    """Test every seed row respects the pair bound"""
    analyzer = PaprAnalyzer({'oversample': 16})
    for record in seed_db.list_records():
        assert all(r['within_bound'] and r['bound'] == 2 for r in analyzer.analyze(record.pair))


def test_set_rows_within_set_size():
    """Test size-4 and size-8 example rows stay under P"""
    analyzer = PaprAnalyzer()
    for name, size in (('example1_cs.txt', 4), ('example2_cs.txt', 8), ('q4_len29_cs.txt', 4)):
        records = analyzer.analyze(read_set(EXAMPLES_DIR / name))
        assert len(records) == size
        assert all(r['papr'] <= size + 1e-9 for r in records)


def test_bound_flags_violation():
    """Test a constant stack exceeds its size bound"""
    cs = read_set(EXAMPLES_DIR / 'example1_cs.txt')
    analyzer = PaprAnalyzer({'tolerance': 1e-9})
    assert not analyzer.within_bound(4.1, cs.size)
    assert analyzer.within_bound(4.0 + 1e-12, cs.size)


def test_papr_of_set():
    cs = read_set(EXAMPLES_DIR / 'example2_cs.txt')
    results = papr_of_set(cs, oversample=16)
    assert len(results) == 8
    assert all(r.oversample == 16 and 0.0 <= r.peak_position < 1.0 for r in results)


def test_analyzer_rejects_zero_oversample():
    """Test an explicit oversample of 0 is refused, not replaced by the default"""
    cs = read_set(EXAMPLES_DIR / 'example2_pair.txt')
    with pytest.raises(InputError):
        PaprAnalyzer({'oversample': 16}).analyze(cs, oversample=0)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 4]), st.lists(st.integers(0, 3), min_size=1, max_size=16), st.integers(0, 3))
def test_invariant_under_unimodular_scaling(q, exps, u):
    seq = Sequence.of(exps, q)
    assert papr(scale(seq, u)).papr == pytest.approx(papr(seq).papr, abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 4]), st.lists(st.integers(0, 3), min_size=1, max_size=16), st.integers(1, 8))
def test_doubling_oversample_refines(q, exps, oversample):
    """Test the doubled grid contains the coarse one, so the peak never drops"""
    seq = Sequence.of(exps, q)
    coarse, fine = papr(seq, oversample), papr(seq, 2 * oversample)
    assert fine.papr >= coarse.papr - 1e-9
    assert fine.papr <= len(seq) + 1e-9


@pytest.mark.parametrize('q, limit', [(2, 64), (4, 40)])
def test_composed_pairs_within_two(seed_db, q, limit):
    """Test every row of doubled, Turyn and embedded pairs stays under 2"""
    analyzer = PaprAnalyzer({'oversample': 16})
    checked = 0
    for length in gcp_lengths(q, limit):
        result = seed_db.gcp_for_length(q, length)
        if not result.available:
            continue
        assert all(r['within_bound'] for r in analyzer.analyze(result.pair))
        checked += 1
    assert checked > 5


def test_direct_doubling_and_turyn_within_two(seed_db):
    analyzer = PaprAnalyzer()
    built = [
        golay_double(seed_db.seed(2, 10).pair),
        golay_double(golay_double(seed_db.seed(4, 5).pair)),
        turyn_product(seed_db.seed(2, 10).pair, seed_db.seed(4, 3).pair),
        turyn_product(seed_db.seed(2, 26).pair, seed_db.seed(4, 13).pair),
    ]
    for pair in built:
        records = analyzer.analyze(pair)
        assert all(r['bound'] == 2 and r['papr'] <= 2 + 1e-9 for r in records)
