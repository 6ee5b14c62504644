import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cogroups.constructions import build


def pytest_addoption(parser):
    parser.addoption(
        "--s6-scan",
        action="store_true",
        default=False,
        help="run the S6 subgroup scan part of the acceptance suite",
    )
    parser.addoption(
        "--s7-scan",
        action="store_true",
        default=False,
        help="run the (larger) S7 subgroup scan check",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "s6scan: opt-in S6 exhaustiveness scan (--s6-scan)"
    )
    config.addinivalue_line(
        "markers", "s7scan: opt-in S7 exhaustiveness scan (--s7-scan)"
    )


def pytest_collection_modifyitems(config, items):
    for flag, marker in (("--s6-scan", "s6scan"), ("--s7-scan", "s7scan")):
        if config.getoption(flag):
            continue
        skip = pytest.mark.skip(reason=f"pass {flag} to run")
        for item in items:
            if marker in item.keywords:
                item.add_marker(skip)


@lru_cache(maxsize=None)
def built(spec):
    """Shared group cache; groups are immutable so reuse is safe."""
    return build(spec)


@pytest.fixture
def group_of():
    return built
