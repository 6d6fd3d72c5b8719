#!/usr/bin/env python3
"""Regenerate Derived Seed Pairs"""
import argparse
import logging
from pathlib import Path

import yaml

from src.database import SeedDatabase, regenerate_derived_seeds
from src.search import SearchEngine

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')


def init_seeds(config_path='config.yaml', lengths=(3, 5)):
    config_path = Path(config_path)
    with open(config_path, 'r') as f:
        config = yaml.safe_load(f) or {}
    seeds_path = config_path.parent / config.get('seeds', {}).get('path', 'data/seeds')

    print("Regenerating searched quaternary seeds...")
    engine = SearchEngine(config.get('search', {}))
    written = regenerate_derived_seeds(seeds_path, engine, lengths=lengths, q=4)
    for path in written:
        print(f"  wrote {path}")

    # Reload so every file on disk is verified
    db = SeedDatabase(seeds_path)
    print(f"Seed database verified: {len(db.list_records())} pairs")


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Regenerate derived seed pairs')
    parser.add_argument('--config', default='config.yaml')
    parser.add_argument('--lengths', default='3,5', help='Comma-separated quaternary lengths')
    args = parser.parse_args()
    init_seeds(args.config, tuple(int(n) for n in args.lengths.split(',')))
