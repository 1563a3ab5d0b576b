"""Routing of internally disjoint paths between vertex pairs.

Two engines live here. ``PathRouter`` is an exact backtracking search used
both for linkages and for subdivision paths. ``fan_paths`` builds vertex
disjoint fans into a target set with a min-cost flow.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import networkx as nx

from .const import DEADLINE_POLL_INTERVAL
from .deadline import check_deadline
from .graph import adjacency_masks

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

    from .data import Path

_LOGGER = logging.getLogger(__name__)

_SOURCE = "source"
_SINK = "sink"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class PathRouter:
    """Exact search for paths whose interiors are pairwise disjoint.

    Every request (a, b) gets a path from a to b. Interior vertices avoid the
    ``blocked`` mask and each other; endpoints may be shared between requests.
    Only induced paths are explored: any path shortcuts to an induced one on
    a subset of its own vertices, so nothing is lost.
    """

    def __init__(self, adjacency: Sequence[int]) -> None:
        """Initialize with one neighbour mask per vertex."""
        self._adjacency = list(adjacency)
        self._n = len(self._adjacency)
        self._full = (1 << self._n) - 1
        self._expansions = 0

    @classmethod
    def for_graph(cls, graph: nx.Graph) -> PathRouter:
        """Build a router for a graph on 0..n-1."""
        return cls(adjacency_masks(graph))

    def _tick(self) -> None:
        self._expansions += 1
        if self._expansions % DEADLINE_POLL_INTERVAL == 0:
            check_deadline()

    def _distance(self, a: int, b: int, allowed: int) -> int | None:
        """Return the BFS distance from a to b through ``allowed`` vertices."""
        if a == b:
            return 0
        target = 1 << b
        seen = 1 << a
        frontier = seen
        distance = 0
        while frontier:
            distance += 1
            reach = 0
            for vertex in _bits(frontier):
                reach |= self._adjacency[vertex]
            if reach & target:
                return distance
            frontier = reach & allowed & ~seen
            seen |= frontier
        return None

    def _distances_to(self, b: int, allowed: int) -> dict[int, int]:
        distances = {b: 0}
        frontier = 1 << b
        seen = frontier
        level = 0
        while frontier:
            level += 1
            reach = 0
            for vertex in _bits(frontier):
                reach |= self._adjacency[vertex]
            frontier = reach & allowed & ~seen
            seen |= frontier
            for vertex in _bits(frontier):
                distances[vertex] = level
        return distances

    def _feasible(
        self, requests: Sequence[tuple[int, int]], start: int, free: int
    ) -> bool:
        """Check reachability and a counting bound for requests[start:]."""
        needed = 0
        for a, b in requests[start:]:
            if self._adjacency[a] >> b & 1:
                continue
            distance = self._distance(a, b, free)
            if distance is None:
                return False
            needed += distance - 1
        return needed <= free.bit_count()

    def route(
        self, requests: Sequence[tuple[int, int]], blocked: int = 0
    ) -> list[Path] | None:
        """Return one path per request, in request order, or None."""
        requests = list(requests)
        free = self._full & ~blocked
        if not self._feasible(requests, 0, free):
            return None
        failures: set[tuple[int, int]] = set()
        paths: list[Path | None] = [None] * len(requests)

        def solve(index: int, used: int) -> bool:
            if index == len(requests):
                return True
            if (index, used) in failures:
                return False
            a, b = requests[index]
            available = free & ~used
            for path in self._paths(a, b, available):
                interior = 0
                for vertex in path[1:-1]:
                    interior |= 1 << vertex
                if not self._feasible(requests, index + 1, available & ~interior):
                    continue
                paths[index] = path
                if solve(index + 1, used | interior):
                    return True
            failures.add((index, used))
            return False

        if not solve(0, 0):
            return None
        return [path for path in paths if path is not None]

    def _paths(self, a: int, b: int, available: int) -> Iterable[Path]:
        """Yield induced a-b paths with interiors in ``available``."""
        adjacency = self._adjacency
        if adjacency[a] >> b & 1:
            yield (a, b)
            return
        available &= ~(1 << a | 1 << b)
        order = self._distances_to(b, available)
        path = [a]

        def extend(current: int, banned: int, allowed: int) -> Iterable[Path]:
            self._tick()
            if adjacency[current] >> b & 1:
                yield (*path, b)
                return
            closed = banned | adjacency[current] | 1 << current
            candidates = adjacency[current] & allowed & ~banned
            for vertex in sorted(
                _bits(candidates), key=lambda v: (order.get(v, self._n), v)
            ):
                remaining = allowed & ~closed
                if self._distance(vertex, b, remaining) is None:
                    continue
                path.append(vertex)
                yield from extend(vertex, closed, remaining)
                path.pop()

        yield from extend(a, 0, available)


def fan_paths(
    graph: nx.Graph,
    sources: Sequence[int],
    targets: Iterable[int],
    *,
    removed: Iterable[int] = (),
    cost: Callable[[int, int], int] | None = None,
) -> list[Path] | None:
    """Return vertex-disjoint paths from each source into distinct targets.

    Each path meets the target set only at its last vertex; a source inside
    the target set gets the one-vertex path. The total ``cost`` of the used
    edges (1 per edge by default) is minimal. Returns None when no such
    system exists.
    """
    target_set = set(targets)
    removed_set = set(removed)
    flow = nx.DiGraph()
    for vertex in graph.nodes:
        if vertex in removed_set:
            continue
        if vertex in target_set:
            flow.add_edge(("in", vertex), _SINK, capacity=1, weight=0)
        else:
            flow.add_edge(("in", vertex), ("out", vertex), capacity=1, weight=0)
    for u, v in graph.edges:
        if u in removed_set or v in removed_set:
            continue
        weight = 1 if cost is None else cost(u, v)
        if u not in target_set:
            flow.add_edge(("out", u), ("in", v), capacity=1, weight=weight)
        if v not in target_set:
            flow.add_edge(("out", v), ("in", u), capacity=1, weight=weight)
    for source in sources:
        if source in removed_set or ("in", source) not in flow:
            return None
        flow.add_edge(_SOURCE, ("in", source), capacity=1, weight=0)
    if _SINK not in flow:
        return None
    flow_dict = nx.max_flow_min_cost(flow, _SOURCE, _SINK)
    if sum(flow_dict[_SOURCE].values()) != len(sources):
        _LOGGER.debug("Fan from %s into %s does not exist", sources, sorted(target_set))
        return None
    paths = []
    for source in sources:
        path = [source]
        node: tuple[str, int] | str = ("in", source)
        while node != _SINK:
            node = next(succ for succ, value in flow_dict[node].items() if value > 0)
            if isinstance(node, tuple) and node[0] == "in":
                path.append(node[1])
        paths.append(tuple(path))
    return paths
