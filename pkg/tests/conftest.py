"""Shared fixtures"""
import logging
import sys
from pathlib import Path

import pytest
import yaml

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from src.database import SeedDatabase

DATA_DIR = ROOT / 'data'
SEEDS_DIR = DATA_DIR / 'seeds'
EXAMPLES_DIR = DATA_DIR / 'examples'


@pytest.fixture(scope='session')
def seed_db():
    return SeedDatabase(SEEDS_DIR)


@pytest.fixture
def config_file(tmp_path):
    """Write a config pointing at the packaged data; extra sections override"""
    def write(**sections):
        config = {
            'seeds': {'path': str(SEEDS_DIR)},
            'examples': {'path': str(EXAMPLES_DIR)},
            'search': {'work_bound': 10 ** 9, 'workers': 1},
            'papr': {'oversample': 16, 'tolerance': 1e-9},
            'logging': {'path': str(tmp_path / 'logs' / 'compset.log'), 'level': 'INFO'},
        }
        config.update(sections)
        path = tmp_path / 'config.yaml'
        path.write_text(yaml.safe_dump(config))
        return str(path)
    return write


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop handlers main() attached to streams captured by an earlier test"""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
