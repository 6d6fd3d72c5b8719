"""Exhaustive Complementary Set Search

Rows are filled from both ends toward the middle. After level k every
shift >= N-1-k is fully determined and must cancel exactly; partially
determined shifts are pruned when the known part of the sum is larger than
the number of terms still open.
"""
import itertools
import logging
import multiprocessing as mp
from dataclasses import dataclass, field

import numpy as np

from src.algebra import Alphabet, CorrelationValue, Sequence
from src.errors import InputError, WorkBoundExceeded
from src.verification import ComplementarySet, certify, verify

logger = logging.getLogger(__name__)

DEFAULT_WORK_BOUND = 10 ** 9
BOUND_SLACK = 1e-9


def canonical_rows(rows, q):
    """Representative under row order, per-row scaling, reversal and conjugation"""
    variants = []
    for flip in (False, True):
        for conj in (False, True):
            normalized = []
            for row in rows:
                row = tuple(row[::-1]) if flip else tuple(row)
                if conj:
                    row = tuple((-e) % q for e in row)
                lead = row[0]
                normalized.append(tuple((e - lead) % q for e in row))
            variants.append(tuple(sorted(normalized)))
    return min(variants)


def canonical_form(cs):
    return canonical_rows(cs.exponent_rows(), cs.q)


def equivalent(first, second):
    return first.q == second.q and canonical_form(first) == canonical_form(second)


@dataclass
class SearchResult:
    """Canonical sets found by the oracle"""
    q: int
    set_size: int
    length: int
    sets: list = field(default_factory=list)
    total_found: int = 0
    nodes: int = 0

    @property
    def incomplete(self):
        return self.total_found > len(self.sets)

    def canonical_forms(self):
        return [canonical_form(cs) for cs in self.sets]


class _Searcher:
    """Depth-first ends-inward enumeration over one partition of level 0"""

    def __init__(self, q, set_size, length, work_bound):
        self.q = q
        self.size = set_size
        self.n = length
        self.work_bound = work_bound
        self.nodes = 0
        self.found = set()
        self.roots = np.exp(2j * np.pi * np.arange(q) / q)
        self.grid = [[None] * length for _ in range(set_size)]
        self.levels = []
        for k in range((length + 1) // 2):
            positions = (k,) if k == length - 1 - k else (k, length - 1 - k)
            cells = [(p, i) for p in range(set_size) for i in positions if i != 0]
            self.levels.append(cells)

    def level_zero_count(self):
        return self.q ** len(self.levels[0])

    def level_zero_choices(self, part=0, parts=1):
        """Lazy stride `part` of `parts` over every level-0 assignment"""
        choices = itertools.product(range(self.q), repeat=len(self.levels[0]))
        return itertools.islice(choices, part, None, parts)

    def _assign(self, cells, values):
        for (p, i), v in zip(cells, values):
            self.grid[p][i] = v

    def _exact_zero(self, tau):
        exps = [row[i] - row[i + tau] for row in self.grid for i in range(self.n - tau)]
        return CorrelationValue.from_exponents(self.q, exps).is_zero()

    def _within_bound(self, tau):
        known = 0j
        open_terms = 0
        for row in self.grid:
            for i in range(self.n - tau):
                x, y = row[i], row[i + tau]
                if x is None or y is None:
                    open_terms += 1
                else:
                    known += self.roots[(x - y) % self.q]
        return abs(known) <= open_terms + BOUND_SLACK

    def _feasible(self, level):
        newest = self.n - 1 - level
        if newest >= 1 and not self._exact_zero(newest):
            return False
        return all(self._within_bound(tau) for tau in range(1, min(newest, self.n)))

    def _count(self):
        self.nodes += 1
        if self.nodes > self.work_bound:
            raise WorkBoundExceeded(self.nodes, self.work_bound)

    def _descend(self, level):
        if level == len(self.levels):
            rows = [tuple(row) for row in self.grid]
            cs = ComplementarySet.from_rows([Sequence(Alphabet(self.q), r) for r in rows])
            if verify(cs).is_cs:
                self.found.add(canonical_rows(rows, self.q))
            return
        cells = self.levels[level]
        for values in itertools.product(range(self.q), repeat=len(cells)):
            self._count()
            self._assign(cells, values)
            if self._feasible(level):
                self._descend(level + 1)
        self._assign(cells, [None] * len(cells))

    def run(self, part=0, parts=1):
        for row in self.grid:
            row[0] = 0
        cells = self.levels[0]
        for values in self.level_zero_choices(part, parts):
            self._count()
            self._assign(cells, values)
            if self._feasible(0):
                self._descend(1)
        return self.found, self.nodes


def _run_partition(args):
    q, set_size, length, work_bound, part, parts = args
    try:
        found, nodes = _Searcher(q, set_size, length, work_bound).run(part, parts)
    except WorkBoundExceeded as e:
        return set(), e.nodes, True
    return found, nodes, False


class SearchEngine:
    """Brute-force oracle for Golay pairs and complementary sets"""

    def __init__(self, config=None):
        config = config or {}
        self.work_bound = int(config.get('work_bound', DEFAULT_WORK_BOUND))
        self.workers = max(1, int(config.get('workers', 1)))

    def search_gcp(self, q, length, limit=None):
        return self.search_cs(q, 2, length, limit)

    def search_cs(self, q, set_size, length, limit=None):
        """All sets up to equivalence, in lexicographic canonical order"""
        if q < 1 or set_size < 1 or length < 1:
            raise InputError("q, set size and length must all be >= 1")
        if limit is not None and limit < 0:
            raise InputError("limit must be >= 0")

        # each level-0 assignment costs one node
        first_level = _Searcher(q, set_size, length, self.work_bound).level_zero_count()
        if first_level > self.work_bound:
            raise WorkBoundExceeded(first_level, self.work_bound)

        parts = min(self.workers, first_level)
        if parts > 1:
            # partition budgets sum to at most the configured bound
            share = self.work_bound // parts
            jobs = [(q, set_size, length, share, part, parts) for part in range(parts)]
            with mp.Pool(parts) as pool:
                partial = pool.map(_run_partition, jobs)
        else:
            partial = [_run_partition((q, set_size, length, self.work_bound, 0, 1))]

        found, nodes, exhausted = set(), 0, False
        for part_found, part_nodes, part_exhausted in partial:
            found |= part_found
            nodes += part_nodes
            exhausted = exhausted or part_exhausted
        if exhausted or nodes > self.work_bound:
            raise WorkBoundExceeded(nodes, self.work_bound)

        ordered = sorted(found)
        kept = ordered if limit is None else ordered[:limit]
        sets = [certify(ComplementarySet.from_exponents(rows, q), what='search result') for rows in kept]
        logger.info(f"Search q={q} P={set_size} N={length}: {len(ordered)} classes, {nodes} nodes")
        return SearchResult(q, set_size, length, sets, total_found=len(ordered), nodes=nodes)
