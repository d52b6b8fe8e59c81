"""Shared strategies and hypothesis settings for the test suite."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from kstlab.graph import Graph

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("suite")


def graph_from_edge_code(n: int, code: int) -> Graph:
    """Decode a C(n,2)-bit integer into the labeled graph it indexes."""
    adj = [0] * n
    for i, (u, v) in enumerate(itertools.combinations(range(n), 2)):
        if code >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj), None)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    """Arbitrary small graphs via the edge-code decoding."""
    n = draw(st.integers(min_n, max_n))
    bits = n * (n - 1) // 2
    code = draw(st.integers(0, (1 << bits) - 1))
    return graph_from_edge_code(n, code)


@st.composite
def sparse_graphs(draw, min_n=1, max_n=8):
    """Graphs biased toward few edges, where minor search says NOT_FOUND."""
    n = draw(st.integers(min_n, max_n))
    all_pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(all_pairs), max_size=n + 2,
                           unique=True)) if all_pairs else []
    adj = [0] * n
    for u, v in chosen:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), None)


@pytest.fixture(scope="session")
def all_graph_codes_by_n():
    """Every labeled graph on up to 5 vertices, keyed by vertex count."""
    return {
        n: [graph_from_edge_code(n, c) for c in range(1 << (n * (n - 1) // 2))]
        for n in range(6)
    }
