"""Shared helpers for the test suite."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import pytest

from gpgraph.gp_core import GPParams, SimpleGraph


def valid_pairs(n_max: int, n_min: int = 3) -> Iterator[GPParams]:
    """All admissible (n, k) with n_min <= n <= n_max and 0 < k < n/2."""
    for n in range(n_min, n_max + 1):
        for k in range(1, (n - 1) // 2 + 1):
            if 2 * k < n:
                yield GPParams(n, k)


def assert_is_cycle(graph: SimpleGraph, vertices: Sequence[int]) -> None:
    """Assert the vertex sequence is a simple closed cycle in the graph."""
    assert len(vertices) >= 3
    assert len(set(vertices)) == len(vertices), "cycle vertices must be distinct"
    for i, v in enumerate(vertices):
        w = vertices[(i + 1) % len(vertices)]
        assert graph.has_edge(v, w), f"missing edge {v}-{w}"


def count_spokes(params: GPParams, vertices: Sequence[int]) -> int:
    """Number of consecutive pairs in the closed sequence that cross rims."""
    n = params.n
    crossings = 0
    for i, v in enumerate(vertices):
        w = vertices[(i + 1) % len(vertices)]
        if (v < n) != (w < n):
            crossings += 1
    return crossings


def assert_valid_coloring(graph: SimpleGraph, coloring: Sequence[int]) -> None:
    assert len(coloring) == graph.num_vertices
    for v, w in graph.edges:
        assert coloring[v] != coloring[w], f"edge {v}-{w} is monochromatic"


@pytest.fixture
def petersen_params() -> GPParams:
    return GPParams(5, 2)
