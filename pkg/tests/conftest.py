import pytest

from graphhom import build_complex, cohomology, corpus_graphs


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()


@pytest.fixture(scope="session")
def complex_of():
    """Session-wide cache of built complexes keyed by (graph, variant)."""
    cache = {}

    def get(graph, variant):
        key = (graph, variant)
        if key not in cache:
            cache[key] = build_complex(graph, variant)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def table_of(complex_of):
    """Session-wide cache of cohomology tables keyed by (graph, variant)."""
    cache = {}

    def get(graph, variant):
        key = (graph, variant)
        if key not in cache:
            cache[key] = cohomology(complex_of(graph, variant))
        return cache[key]

    return get
