"""Pytest fixtures for Jacobson Lab tests."""

import pytest

from jacobson_lab.config import get_settings
from jacobson_lab.graph import build_graph
from jacobson_lab.oracles import SearchBudget
from jacobson_lab.rings import parse_ring


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop the cached settings so monkeypatched JLAB_* variables take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def ring():
    """Parse a ring spec."""
    return parse_ring


@pytest.fixture
def graph():
    """Parse a ring spec and build its Jacobson graph."""

    def _build(spec: str):
        return build_graph(parse_ring(spec))

    return _build


@pytest.fixture
def z3z3_graph():
    return build_graph(parse_ring("Z3 x Z3"))


@pytest.fixture
def budget():
    """Generous budget for the small graphs used in tests."""
    return SearchBudget(vertex_limit=32, time_limit_ms=60000)


@pytest.fixture
def temp_output_dir(tmp_path):
    """Temporary output directory for testing."""
    output_dir = tmp_path / "jlab_output"
    output_dir.mkdir()
    return output_dir
