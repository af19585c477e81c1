"""Shared fixtures: censuses are expensive enough to build once per session."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cyclosure.census import enumerate_connected_graphs
from cyclosure.graph import Graph, build_graph

settings.register_profile(
    "ci",
    deadline=None,
    max_examples=50,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def census5() -> list[Graph]:
    return list(enumerate_connected_graphs(5))


@pytest.fixture(scope="session")
def census6() -> list[Graph]:
    return list(enumerate_connected_graphs(6))


@pytest.fixture(scope="session")
def census7() -> list[Graph]:
    return list(enumerate_connected_graphs(7))


@pytest.fixture(scope="session")
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [p for k, p in enumerate(pairs) if (mask >> k) & 1]
    return build_graph(n, edges)
