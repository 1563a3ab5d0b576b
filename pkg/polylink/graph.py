"""Graph helpers on top of networkx; vertices are always 0..n-1."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import networkx as nx

from .exceptions import InvalidInputError

if TYPE_CHECKING:
    from collections.abc import Iterable

_LOGGER = logging.getLogger(__name__)


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> nx.Graph:
    """Return a simple graph on 0..n-1 with the given edges."""
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u, v in edges:
        if u == v:
            msg = f"Loop at vertex {u} is not allowed"
            raise InvalidInputError(msg)
        if not (0 <= u < n and 0 <= v < n):
            msg = f"Edge ({u}, {v}) leaves the vertex range [0, {n})"
            raise InvalidInputError(msg)
        graph.add_edge(u, v)
    return graph


def complete_graph(n: int) -> nx.Graph:
    """Return K_n on 0..n-1."""
    return nx.complete_graph(n)


def order(graph: nx.Graph) -> int:
    """Return n after checking that the vertices are exactly 0..n-1."""
    n = graph.number_of_nodes()
    if set(graph.nodes) != set(range(n)):
        msg = "Graph vertices must be the integers 0..n-1"
        raise InvalidInputError(msg)
    if nx.number_of_selfloops(graph):
        msg = "Graph must not have loops"
        raise InvalidInputError(msg)
    return n


def adjacency_masks(graph: nx.Graph) -> list[int]:
    """Return one neighbour bit mask per vertex."""
    masks = [0] * order(graph)
    for u, v in graph.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def complement(graph: nx.Graph) -> nx.Graph:
    """Return the complement graph on the same vertex set."""
    return nx.complement(graph)


def vertex_connectivity(graph: nx.Graph) -> int:
    """Return the largest k such that the graph is k-connected.

    k-connected means more than k vertices and no separating set smaller
    than k. networkx computes this with unit-capacity flows on the
    vertex-split auxiliary digraph.
    """
    if order(graph) < 2:
        msg = "Vertex connectivity needs at least two vertices"
        raise InvalidInputError(msg)
    return nx.node_connectivity(graph)


def maximum_clique(graph: nx.Graph) -> list[int]:
    """Return a maximum clique (exact branch and bound)."""
    if graph.number_of_nodes() == 0:
        return []
    clique, _ = nx.max_weight_clique(graph, weight=None)
    return sorted(clique)
