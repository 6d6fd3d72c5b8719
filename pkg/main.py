#!/usr/bin/env python3
"""
CompSet Toolkit - Complementary Sets of Non-Power-of-Two Lengths
Main Application Entry Point
"""

import argparse
import json
import logging
import sys
from pathlib import Path

import yaml

from src.constructions import construct_theorem1, construct_theorem2, default_coeffs4, default_coeffs8, stack
from src.database import SeedDatabase
from src.errors import CompSetError, InputError
from src.formats import parse_coeffs, pretty, read_set, serialize_json, serialize_text, write_set
from src.papr import PaprAnalyzer
from src.reachability import CoverageChecker, reachability_set, table1_diff
from src.search import SearchEngine
from src.verification import ComplementarySet, certify, verify

logger = logging.getLogger(__name__)

BASE_DIR = Path(__file__).resolve().parent
DEFAULT_CONFIG = BASE_DIR / 'config.yaml'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Packaged golden files: (inputs, coefficients, expected output)
GOLDEN_BUILDS = {
    'example1_cs.txt': ('theorem1', ('example1_pair_a.txt', 'example1_pair_b.txt'), (0, 0, 0, 1)),
    'example2_cs.txt': ('theorem2', ('example2_pair.txt', 'example2_set.txt'), (0, 1, 1, 0, 0, 0)),
}


def load_config(config_path):
    """Load configuration from YAML file"""
    try:
        with open(config_path, 'r') as f:
            config = yaml.safe_load(f)
    except FileNotFoundError:
        raise InputError(f"Configuration file not found: {config_path}")
    except yaml.YAMLError as e:
        raise InputError(f"Invalid YAML configuration: {e}")
    return config or {}


def setup_logging(config, base_dir, debug=False):
    """File + stderr logging; stdout stays clean for command output"""
    handlers = [logging.StreamHandler(sys.stderr)]
    log_path = config.get('path')
    if log_path:
        log_path = Path(base_dir) / log_path
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_path))
    level = logging.DEBUG if debug else getattr(logging, str(config.get('level', 'INFO')).upper(), logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


class CompSetToolkit:
    """Main toolkit controller"""

    def __init__(self, config_path=DEFAULT_CONFIG, config=None):
        """Initialize components from configuration"""
        self.config_path = Path(config_path)
        self.config = config if config is not None else load_config(config_path)
        self.base_dir = self.config_path.parent

        logger.info("Initializing CompSet toolkit...")
        self.seeds = SeedDatabase(self._resolve('seeds', 'data/seeds'))
        self.search_engine = SearchEngine(self.config.get('search', {}))
        self.papr_analyzer = PaprAnalyzer(self.config.get('papr', {}))
        self.coverage = CoverageChecker(self.seeds)
        self.constructions = self.config.get('constructions', {})
        self.examples_path = self._resolve('examples', 'data/examples')
        logger.info("Toolkit initialization complete")

    def _resolve(self, section, default):
        path = Path(self.config.get(section, {}).get('path', default))
        return path if path.is_absolute() else self.base_dir / path

    def emit(self, cs, out=None, fmt='text', show_pretty=False):
        """Write a set to a file or print it"""
        if out:
            write_set(cs, out, fmt)
        elif show_pretty:
            for row in cs.rows:
                print(pretty(row))
        elif fmt == 'json':
            print(serialize_json(cs), end='')
        else:
            print(serialize_text(cs), end='')

    def _pair_from_file(self, path, what):
        return certify(read_set(path), what=f"{what} ({path})")

    def verify_file(self, path, report='text'):
        cs = read_set(path)
        result = verify(cs)
        if report == 'json':
            print(json.dumps(result.to_record(), indent=2))
        else:
            print(f"is_cs: {str(result.is_cs).lower()}")
            print(f"set size: {cs.size}  length: {cs.length}  q: {cs.q}")
            print(f"peak: {result.peak} (expected {cs.size * cs.length})")
            if result.first_defect_shift is not None:
                print(f"first_defect_shift: {result.first_defect_shift}")
            for tau, value in result.sum_profile.items(nonnegative=True):
                print(f"  tau={tau:>3}  sum={value}")
        return 0 if result.is_cs else 1

    def _coeffs(self, text, q, use_complex, key, fallback):
        """Explicit --coeffs, else the configured default literals, else the built-in default"""
        if text:
            return parse_coeffs(text, q, use_complex)
        configured = self.constructions.get(key)
        if configured:
            return parse_coeffs(','.join(str(v) for v in configured), q, complex_literals=True)
        return fallback(q)

    def theorem1(self, pair_a, pair_b, coeffs, use_complex=False):
        first = self._pair_from_file(pair_a, 'pair A')
        second = self._pair_from_file(pair_b, 'pair B')
        values = self._coeffs(coeffs, first.q, use_complex, 'theorem1_default', default_coeffs4)
        return construct_theorem1(first, second, values)

    def theorem2(self, pair, set_b, coeffs, use_complex=False):
        first = self._pair_from_file(pair, 'pair')
        second = certify(read_set(set_b), what=f"size-4 set ({set_b})")
        values = self._coeffs(coeffs, first.q, use_complex, 'theorem2_default', default_coeffs8)
        return construct_theorem2(first, second, values)

    def stack_files(self, paths):
        return stack([certify(read_set(p), what=str(p)) for p in paths])

    def gcp(self, q, length):
        result = self.seeds.gcp_for_length(q, length)
        if not result.available:
            return result, None
        note = '\n'.join(f"derivation: {step}" for step in result.chain)
        return result, ComplementarySet.from_rows(result.pair.rows, note=note)

    def enumerate_lengths(self, q, size, max_length, with_table1=False):
        reach = reachability_set(q, size, max_length)
        record = {
            'q': q,
            'set_size': size,
            'max_length': max_length,
            'lengths': [
                {'length': length, 'label': label, 'witness': str(derivation),
                 'derivations': [str(d) for d in reach.derivations[length]]}
                for length, label, derivation in self.coverage.coverage(q, size, max_length)
            ],
        }
        if with_table1:
            record['table1_diff'] = table1_diff(q, 8 if size % 8 == 0 else 4, max_length)
        return record

    def selftest(self):
        """Verify every packaged example and rebuild the golden outputs"""
        results = []
        for path in sorted(self.examples_path.glob('*.txt')):
            ok = verify(read_set(path)).is_cs
            results.append((f"verify {path.name}", ok))

        for expected, (kind, inputs, coeffs) in GOLDEN_BUILDS.items():
            first, second = (self.examples_path / name for name in inputs)
            if kind == 'theorem1':
                built = self.theorem1(first, second, ','.join(map(str, coeffs)))
            else:
                built = self.theorem2(first, second, ','.join(map(str, coeffs)))
            same = serialize_text(built) == (self.examples_path / expected).read_text(encoding='utf-8')
            results.append((f"rebuild {expected}", same))

        len29 = self.examples_path / 'q4_len29_cs.txt'
        if len29.exists():
            built, _ = self.coverage.realize(4, 4, 29)
            results.append(("rebuild q4_len29_cs.txt", serialize_text(built) == len29.read_text(encoding='utf-8')))
        return results


def build_parser():
    parser = argparse.ArgumentParser(
        description='CompSet Toolkit - complementary sets of non-power-of-two lengths'
    )
    parser.add_argument('--config', default=str(DEFAULT_CONFIG), help='Configuration file')
    parser.add_argument('--debug', action='store_true', help='Debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    def output_options(p):
        p.add_argument('--out', help='Write the set to this file')
        p.add_argument('--format', choices=['text', 'json'], default='text', help='Output format')
        p.add_argument('--pretty', action='store_true', help='Render rows as +, -, i, î')

    p = sub.add_parser('verify', help='Check a sequence-set file')
    p.add_argument('file')
    p.add_argument('--report', choices=['text', 'json'], default='text')

    p = sub.add_parser('theorem1', help='Size-4 set of length M+N from two pairs')
    p.add_argument('--pair-a', required=True)
    p.add_argument('--pair-b', required=True)
    p.add_argument('--coeffs', help='x0,x1,y0,y1 as exponents (default 1,1,1,-1)')
    p.add_argument('--complex', action='store_true', help='Coefficients given as 1,-1,i,-i')
    output_options(p)

    p = sub.add_parser('theorem2', help='Size-8 set of length M+P from a pair and a size-4 set')
    p.add_argument('--pair', required=True)
    p.add_argument('--set', dest='set_file', required=True)
    p.add_argument('--coeffs', help='x0,x1,x2,x3,y0,y1 as exponents (default 1,-1,-1,1,1,1)')
    p.add_argument('--complex', action='store_true', help='Coefficients given as 1,-1,i,-i')
    output_options(p)

    p = sub.add_parser('stack', help='Vertically concatenate sets')
    p.add_argument('files', nargs='+')
    output_options(p)

    p = sub.add_parser('gcp', help='Compose a Golay pair of a given length')
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--len', dest='length', type=int, required=True)
    output_options(p)

    p = sub.add_parser('enumerate', help='Reachable lengths with witnesses')
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--max', dest='max_length', type=int, required=True)
    p.add_argument('--table1', action='store_true', help='Diff against the printed table')
    p.add_argument('--json', action='store_true')

    p = sub.add_parser('build', help='Construct a verified set of a given size and length')
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--len', dest='length', type=int, required=True)
    output_options(p)

    p = sub.add_parser('search', help='Exhaustive search up to equivalence')
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--len', dest='length', type=int, required=True)
    p.add_argument('--limit', type=int)
    p.add_argument('--json', action='store_true')

    p = sub.add_parser('papr', help='Per-row PAPR of a set')
    p.add_argument('file')
    p.add_argument('--oversample', type=int)
    p.add_argument('--json', action='store_true')

    p = sub.add_parser('seeds', help='Seed database')
    seeds_sub = p.add_subparsers(dest='seeds_command', required=True)
    p = seeds_sub.add_parser('list', help='List seed pairs')
    p.add_argument('--q', type=int)
    p.add_argument('--json', action='store_true')

    sub.add_parser('selftest', help='Run the golden example suite')
    return parser


def run_command(toolkit, args):
    """Dispatch one subcommand; returns the exit code"""
    if args.command == 'verify':
        return toolkit.verify_file(args.file, args.report)

    if args.command == 'theorem1':
        cs = toolkit.theorem1(args.pair_a, args.pair_b, args.coeffs, args.complex)
        toolkit.emit(cs, args.out, args.format, args.pretty)
        return 0

    if args.command == 'theorem2':
        cs = toolkit.theorem2(args.pair, args.set_file, args.coeffs, args.complex)
        toolkit.emit(cs, args.out, args.format, args.pretty)
        return 0

    if args.command == 'stack':
        toolkit.emit(toolkit.stack_files(args.files), args.out, args.format, args.pretty)
        return 0

    if args.command == 'gcp':
        result, cs = toolkit.gcp(args.q, args.length)
        if cs is None:
            print(f"unavailable: {result.reason}")
            return 1
        for step in result.chain:
            logger.info(f"derivation: {step}")
        toolkit.emit(cs, args.out, args.format, args.pretty)
        return 0

    if args.command == 'enumerate':
        record = toolkit.enumerate_lengths(args.q, args.size, args.max_length, args.table1)
        if args.json:
            print(json.dumps(record, indent=2))
        else:
            print(f"q={args.q} set size {args.size}, lengths <= {args.max_length}: "
                  f"{len(record['lengths'])} reachable")
            for entry in record['lengths']:
                print(f"{entry['length']:>5}  {entry['label']:<15} {entry['witness']}")
            if args.table1:
                diff = record['table1_diff']
                print(f"table1 missing: {diff['missing']}")
                print(f"table1 extra:   {diff['extra']}")
        if args.table1 and record['table1_diff']['missing']:
            return 1
        return 0

    if args.command == 'build':
        cs, witness = toolkit.coverage.realize(args.q, args.size, args.length)
        logger.info(f"witness: {witness}")
        toolkit.emit(cs, args.out, args.format, args.pretty)
        return 0

    if args.command == 'search':
        result = toolkit.search_engine.search_cs(args.q, args.size, args.length, args.limit)
        if args.json:
            print(json.dumps({
                'q': result.q, 'set_size': result.set_size, 'length': result.length,
                'total_found': result.total_found, 'incomplete': result.incomplete,
                'nodes': result.nodes,
                'sets': [[list(r) for r in cs.exponent_rows()] for cs in result.sets],
            }, indent=2))
        else:
            for cs in result.sets:
                print(serialize_text(cs), end='')
            if result.incomplete:
                logger.warning(f"incomplete: showing {len(result.sets)} of {result.total_found} classes")
        return 0

    if args.command == 'papr':
        cs = read_set(args.file)
        records = toolkit.papr_analyzer.analyze(cs, args.oversample)
        if args.json:
            print(json.dumps(records, indent=2))
        else:
            for r in records:
                mark = "ok" if r['within_bound'] else "EXCEEDS"
                print(f"row {r['row']:>3}  papr={r['papr']:.6f}  ({r['papr_db']:.3f} dB)  "
                      f"t*={r['peak_position']:.6f}  bound={r['bound']}  {mark}")
        return 0 if all(r['within_bound'] for r in records) else 1

    if args.command == 'seeds':
        records = toolkit.seeds.list_records(args.q)
        if args.json:
            print(json.dumps([r.to_record() for r in records], indent=2))
        else:
            for r in records:
                print(f"q={r.q}  len={r.length:>3}  {r.provenance:<14} {r.source}")
                if r.citation:
                    print(f"{'':<26}cited: {r.citation}")
        return 0

    if args.command == 'selftest':
        results = toolkit.selftest()
        for name, ok in results:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
        return 0 if all(ok for _, ok in results) else 1

    raise InputError(f"unknown command {args.command}")


def main(argv=None):
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = load_config(args.config)
        setup_logging(config.get('logging', {}), Path(args.config).resolve().parent, args.debug)
        toolkit = CompSetToolkit(args.config, config)
        return run_command(toolkit, args)
    except CompSetError as e:
        logger.error(f"{e.kind}: {e}")
        print(json.dumps(e.to_record()), file=sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
