from pathlib import Path

import pytest

from ezd.cli import load_ring

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture(scope="session")
def ring_fixture():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_ring(FIXTURES / name)
        return cache[name]
    return get
