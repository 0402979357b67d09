import functools

import pytest

import qcrystal as qc


@functools.lru_cache(maxsize=None)
def _build(name, lam):
    return qc.generate_crystal(qc.cartan_datum(name), lam)


@pytest.fixture(scope="session")
def graph_of():
    """Cached crystal builder shared across the suite: graph_of('A2', (1, 1))."""
    return _build
