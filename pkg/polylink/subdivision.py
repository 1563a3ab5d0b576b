"""Rooted complete-graph subdivisions and the constructive linkage algorithms."""

from __future__ import annotations

import logging
from itertools import combinations, permutations
from typing import TYPE_CHECKING

from .data import CheckReport, Linkage, RootedSubdivision, Violation
from .deadline import check_deadline
from .exceptions import InvalidInputError, LinkageAssemblyError, PreconditionError
from .graph import order, vertex_connectivity
from .lattice import find_simplex_face, graph_of
from .linkage import check_pairing, validate_linkage
from .routing import PathRouter, fan_paths

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

    import networkx as nx

    from .data import Pairing, Path
    from .polytope import CombinatorialPolytope

_LOGGER = logging.getLogger(__name__)


def _colex_choices(items: Sequence[int], size: int) -> Iterator[tuple[int, ...]]:
    """Yield size-subsets of ``items`` in colexicographic order of position."""
    subsets = sorted(combinations(range(len(items)), size), key=lambda c: c[::-1])
    for positions in subsets:
        yield tuple(items[position] for position in positions)


def find_rooted_subdivision(
    graph: nx.Graph, root: int, m: int, *, router: PathRouter | None = None
) -> RootedSubdivision | None:
    """Return a subdivision of K_m branching at root and m - 1 of its neighbours.

    Neighbour subsets are tried in colexicographic order and branch pairs are
    routed in lexicographic order. The search is exact: None means no such
    subdivision exists.
    """
    n = order(graph)
    if m < 1:
        msg = f"Subdivision size must be >= 1, got {m}"
        raise InvalidInputError(msg)
    if not 0 <= root < n:
        msg = f"Root {root} is not a vertex of a graph on {n} vertices"
        raise InvalidInputError(msg)
    if m == 1:
        return RootedSubdivision(root, (root,))
    neighbours = sorted(graph.neighbors(root))
    if len(neighbours) < m - 1:
        return None
    router = router if router is not None else PathRouter.for_graph(graph)
    for chosen in _colex_choices(neighbours, m - 1):
        check_deadline()
        branch = (root, *chosen)
        blocked = 0
        for vertex in branch:
            blocked |= 1 << vertex
        requests = sorted(tuple(sorted(pair)) for pair in combinations(branch, 2))
        paths = router.route(requests, blocked)
        if paths is not None:
            _LOGGER.debug("Rooted K_%s at %s branches at %s", m, root, branch)
            return RootedSubdivision(
                root, branch, tuple(zip(requests, paths, strict=True))
            )
    _LOGGER.debug("No rooted K_%s at %s", m, root)
    return None


def check_subdivision(
    graph: nx.Graph, subdivision: RootedSubdivision
) -> CheckReport:
    """Check every rooted-subdivision invariant against the graph."""
    violations: list[Violation] = []

    def flag(code: str, message: str, certificate: Sequence[int] = ()) -> None:
        violations.append(Violation(code, message, tuple(certificate)))

    branch = subdivision.branch
    root = subdivision.root
    if len(set(branch)) != len(branch):
        flag("branch-distinct", "branch vertices repeat", branch)
    if not branch or branch[0] != root:
        flag("root", f"root {root} is not the first branch vertex")
    for vertex in branch[1:]:
        if not graph.has_edge(root, vertex):
            flag("branch-neighbour", f"{vertex} is not adjacent to the root", [vertex])
    interiors: dict[int, tuple[int, int]] = {}
    branch_set = set(branch)
    for a, b in combinations(branch, 2):
        try:
            path = subdivision.path(a, b)
        except KeyError:
            flag("missing-path", f"no path joins {a} and {b}", (a, b))
            continue
        if path[0] != a or path[-1] != b or len(set(path)) != len(path):
            flag("path-endpoints", f"path {path} does not join {a} and {b}", path)
        for u, v in zip(path, path[1:], strict=False):
            if not graph.has_edge(u, v):
                flag("path-edge", f"({u}, {v}) is not an edge", (u, v))
        for vertex in path[1:-1]:
            if vertex in branch_set:
                flag("path-through-branch", f"path {a}-{b} meets {vertex}", [vertex])
            elif vertex in interiors:
                flag(
                    "paths-overlap",
                    f"paths {interiors[vertex]} and {(a, b)} share {vertex}",
                    [vertex],
                )
            interiors[vertex] = (a, b)
    return CheckReport(tuple(violations))


def _loop_erased(walk: Sequence[int]) -> tuple[int, ...]:
    path: list[int] = []
    position: dict[int, int] = {}
    for vertex in walk:
        if vertex in position:
            for dropped in path[position[vertex] + 1 :]:
                del position[dropped]
            del path[position[vertex] + 1 :]
            continue
        position[vertex] = len(path)
        path.append(vertex)
    return tuple(path)


def _walk(*parts: Iterable[int]) -> list[int]:
    walk: list[int] = []
    for part in parts:
        for vertex in part:
            if not walk or walk[-1] != vertex:
                walk.append(vertex)
    return walk


def subdivision_linkage(graph: nx.Graph, pairing: Pairing) -> Linkage:
    """Link the pairs through a rooted K_{3k-1} at the last target.

    Steps: build the subdivision K rooted at t_k; join the other 2k - 1
    terminals to the non-root branch vertices by a fan using as few edges
    outside K as possible; route pair i through a branch vertex the fan left
    free; send s_k straight to t_k.
    """
    check_pairing(graph, pairing)
    k = pairing.k
    n = order(graph)
    connectivity = vertex_connectivity(graph) if n >= 2 else 0
    if connectivity < 2 * k:
        msg = f"Graph is {connectivity}-connected, {2 * k} is required"
        raise PreconditionError(msg)
    _, last_target = pairing.pairs[-1]
    subdivision = find_rooted_subdivision(graph, last_target, 3 * k - 1)
    if subdivision is None:
        msg = f"No rooted K_{3 * k - 1} subdivision at vertex {last_target}"
        raise PreconditionError(msg)

    tips = list(subdivision.branch[1:])
    k_edges = subdivision.edges()

    def cost(u: int, v: int) -> int:
        return (n + 1) * (frozenset((u, v)) not in k_edges) + 1

    sources = [s for s, _ in pairing.pairs] + [t for _, t in pairing.pairs[:-1]]
    fan = fan_paths(graph, sources, tips, removed=[last_target], cost=cost)
    if fan is None:
        msg = f"No terminal fan into the branch vertices for {pairing}"
        raise LinkageAssemblyError(msg)
    source_paths = fan[:k]
    target_paths = fan[k:]
    ends = {path[-1] for path in fan}
    free = [vertex for vertex in tips if vertex not in ends]
    _LOGGER.debug("Fan uses %s, free branch vertices %s", sorted(ends), free)

    last = _loop_erased(_walk(source_paths[-1], [last_target]))
    for attempt, assignment in enumerate(permutations(free, k - 1)):
        paths: list[Path] = []
        for index, hub in enumerate(assignment):
            source_path = source_paths[index]
            target_path = target_paths[index]
            walk = _walk(
                source_path,
                subdivision.path(source_path[-1], hub),
                subdivision.path(hub, target_path[-1]),
                reversed(target_path),
            )
            paths.append(_loop_erased(walk))
        paths.append(last)
        linkage = Linkage(tuple(paths))
        if validate_linkage(graph, pairing, linkage):
            if attempt:
                _LOGGER.info("Linkage assembled on assignment %s", attempt + 1)
            return linkage
    msg = f"Assembled walks for {pairing} are not disjoint under any assignment"
    raise LinkageAssemblyError(msg)


def simplex_face_linkage(
    polytope: CombinatorialPolytope, pairing: Pairing
) -> Linkage:
    """Link the pairs inside a large simplex face.

    The terminals are joined to distinct vertices of a simplex face of
    dimension >= d - gamma by disjoint paths meeting the face only at their
    ends; the face is a clique, so each pair closes with one edge.
    """
    graph = graph_of(polytope)
    check_pairing(graph, pairing)
    k = pairing.k
    bound = (polytope.dim - polytope.gamma + 1) // 2
    if k > bound:
        msg = f"{k} pairs exceed the simplex-face bound {bound}"
        raise PreconditionError(msg)
    if polytope.gamma > 0:
        connectivity = vertex_connectivity(graph)
        if connectivity < 2 * k:
            msg = f"Graph is {connectivity}-connected, {2 * k} is required"
            raise PreconditionError(msg)
    face = find_simplex_face(polytope)
    _LOGGER.debug("Routing into simplex face %s", face.vertices.sorted())
    terminals = [s for s, _ in pairing.pairs] + [t for _, t in pairing.pairs]
    fan = fan_paths(graph, terminals, face.vertices)
    if fan is None:
        msg = f"No terminal fan into simplex face {face.vertices.sorted()}"
        raise LinkageAssemblyError(msg)
    linkage = Linkage(
        tuple(
            _loop_erased(_walk(fan[index], reversed(fan[k + index])))
            for index in range(k)
        )
    )
    if not validate_linkage(graph, pairing, linkage):
        msg = f"Simplex-face linkage for {pairing} failed validation"
        raise LinkageAssemblyError(msg)
    return linkage
