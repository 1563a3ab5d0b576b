"""Vertex-disjoint paths, k-linkedness and exact linkedness."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import networkx as nx

from .data import KLinkedResult, Linkage, LinkednessResult, Pairing
from .deadline import check_deadline
from .exceptions import InvalidInputError, InvalidPairingError
from .graph import complement, order, vertex_connectivity
from .routing import PathRouter

if TYPE_CHECKING:
    from collections.abc import Iterator

_LOGGER = logging.getLogger(__name__)


def check_pairing(graph: nx.Graph, pairing: Pairing) -> None:
    """Raise InvalidPairingError unless every endpoint is a vertex of the graph."""
    n = order(graph)
    if not len(pairing):
        msg = "Pairing is empty"
        raise InvalidPairingError(msg)
    for vertex in pairing.terminals():
        if not 0 <= vertex < n:
            msg = f"Terminal {vertex} is not a vertex of a graph on {n} vertices"
            raise InvalidPairingError(msg)


def _router(graph: nx.Graph, router: PathRouter | None) -> PathRouter:
    return router if router is not None else PathRouter.for_graph(graph)


def disjoint_paths(
    graph: nx.Graph, pairing: Pairing, *, router: PathRouter | None = None
) -> Linkage | None:
    """Return a linkage for the pairing, or None when none exists."""
    check_pairing(graph, pairing)
    blocked = 0
    for vertex in pairing.terminals():
        blocked |= 1 << vertex
    paths = _router(graph, router).route(pairing.pairs, blocked)
    if paths is None:
        return None
    return Linkage(tuple(paths))


def validate_linkage(graph: nx.Graph, pairing: Pairing, linkage: Linkage) -> bool:
    """Return True if the paths join the pairs and are pairwise vertex-disjoint."""
    if len(linkage) != len(pairing):
        return False
    seen: set[int] = set()
    for (source, target), path in zip(pairing, linkage, strict=True):
        if not path or path[0] != source or path[-1] != target:
            return False
        if any(not graph.has_edge(u, v) for u, v in zip(path, path[1:], strict=False)):
            return False
        if len(set(path)) != len(path) or seen.intersection(path):
            return False
        seen.update(path)
    return True


def _colex_subsets(n: int, size: int) -> Iterator[tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    for top in range(size - 1, n):
        for rest in _colex_subsets(top, size - 1):
            yield (*rest, top)


def _pairings_of(vertices: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not vertices:
        yield ()
        return
    first, rest = vertices[0], vertices[1:]
    for index, partner in enumerate(rest):
        remaining = rest[:index] + rest[index + 1 :]
        for tail in _pairings_of(remaining):
            yield ((first, partner), *tail)


def all_pairings(n: int, k: int) -> Iterator[Pairing]:
    """Yield every k-pairing of 0..n-1 in the fixed enumeration order.

    2k-subsets come in colexicographic order; within a subset the smallest
    unmatched vertex is paired first. Pairs are oriented (s, t) with s < t.
    """
    if k < 1:
        msg = f"Number of pairs must be >= 1, got {k}"
        raise InvalidInputError(msg)
    for subset in _colex_subsets(n, 2 * k):
        for pairs in _pairings_of(subset):
            yield Pairing(pairs)


def is_k_linked(
    graph: nx.Graph, k: int, *, router: PathRouter | None = None
) -> KLinkedResult:
    """Decide k-linkedness; the witness is the first failing pairing."""
    if k < 1:
        msg = f"k must be >= 1, got {k}"
        raise InvalidInputError(msg)
    n = order(graph)
    if n < 2 * k:
        return KLinkedResult(k, linked=False)
    router = _router(graph, router)
    checked = 0
    for pairing in all_pairings(n, k):
        checked += 1
        if checked % 1024 == 0:
            check_deadline()
            _LOGGER.debug("Checked %s %s-pairings", checked, k)
        if disjoint_paths(graph, pairing, router=router) is None:
            _LOGGER.debug("Pairing %s has no linkage", pairing)
            return KLinkedResult(k, linked=False, witness=pairing)
    _LOGGER.debug("Graph is %s-linked (%s pairings)", k, checked)
    return KLinkedResult(k, linked=True)


def complement_pairing(graph: nx.Graph, size: int) -> Pairing | None:
    """Return a pairing that first matches non-adjacent vertices.

    Complement edges are matched greedily in lexicographic order, then the
    leftover vertices are paired in ascending order. Returns None when the
    graph has fewer than 2 * size vertices.
    """
    n = order(graph)
    if size < 1 or 2 * size > n:
        return None
    matched: set[int] = set()
    pairs: list[tuple[int, int]] = []
    for u, v in sorted(tuple(sorted(edge)) for edge in complement(graph).edges):
        if len(pairs) == size:
            break
        if u not in matched and v not in matched:
            pairs.append((u, v))
            matched.update((u, v))
    leftover = [vertex for vertex in range(n) if vertex not in matched]
    while len(pairs) < size:
        pairs.append((leftover[0], leftover[1]))
        leftover = leftover[2:]
    return Pairing(tuple(pairs))


def _fails(graph: nx.Graph, k: int, router: PathRouter) -> KLinkedResult:
    """Decide k-linkedness, trying the complement pairing first."""
    first = complement_pairing(graph, k)
    if first is not None and disjoint_paths(graph, first, router=router) is None:
        return KLinkedResult(k, linked=False, witness=first)
    return is_k_linked(graph, k, router=router)


def linkedness(graph: nx.Graph, max_k: int | None = None) -> LinkednessResult:
    """Return the largest k for which the graph is k-linked.

    A k-linked graph is (2k - 1)-connected and has at least 2k vertices, so
    the search starts just above that bound and walks down; the failing
    level above the answer supplies the witness pairing.
    """
    n = order(graph)
    if n < 2 or not nx.is_connected(graph):
        return LinkednessResult(0)
    top = min(n // 2, (vertex_connectivity(graph) + 1) // 2 + 1)
    capped = max_k is not None and max_k < top
    if capped:
        top = max_k
    router = PathRouter.for_graph(graph)
    witness = None
    for k in range(top, 0, -1):
        check_deadline()
        result = _fails(graph, k, router)
        if result.linked:
            _LOGGER.info("Linkedness is %s", k)
            return LinkednessResult(k, witness, capped=capped and k == top)
        witness = result.witness
        capped = False
    return LinkednessResult(0, witness)
