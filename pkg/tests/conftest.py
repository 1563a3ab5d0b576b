"""Shared fixtures for the polylink tests."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from polylink.lattice import graph_of
from polylink.polytope import builtin, cross_polytope, quadrilateral_join

if TYPE_CHECKING:
    import networkx as nx

    from polylink.polytope import CombinatorialPolytope


def pytest_configure(config: pytest.Config) -> None:
    """Register the marker for long-running sweeps."""
    config.addinivalue_line(
        "markers", "slow: long-running sweep; deselect with -m 'not slow'"
    )


@pytest.fixture
def square() -> CombinatorialPolytope:
    """Return the quadrilateral; its diagonals are (0, 1) and (2, 3)."""
    return quadrilateral_join(0, 1)


@pytest.fixture
def octahedron() -> CombinatorialPolytope:
    """Return the 3-crosspolytope."""
    return cross_polytope(3)


@pytest.fixture
def prism() -> CombinatorialPolytope:
    """Return the triangular prism."""
    return builtin("prism3")


@pytest.fixture
def example_d8() -> CombinatorialPolytope:
    """Return simplex(2) joined with two squares: d = 8, 11 vertices."""
    return quadrilateral_join(3, 2)


@pytest.fixture
def example_d8_graph(example_d8: CombinatorialPolytope) -> nx.Graph:
    """Return the graph of the d = 8 example."""
    return graph_of(example_d8)
