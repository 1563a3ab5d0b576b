"""Face lattices, graphs and simplex faces computed from facet incidences."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .data import CheckReport, Violation
from .exceptions import InvalidPolytopeError
from .graph import vertex_connectivity
from .polytope import CombinatorialPolytope, check_incidences, require_valid_incidences
from .vertexset import VertexSet

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    """A face: its vertex set and its dimension (lattice rank minus one)."""

    vertices: VertexSet
    dim: int

    @property
    def is_simplex(self) -> bool:
        """Return True iff the face has dim + 1 vertices."""
        return len(self.vertices) == self.dim + 1


@dataclass(frozen=True)
class _Lattice:
    ranks: dict[int, int]
    problems: tuple[tuple[str, str], ...]


def _maximal(masks: set[int]) -> list[int]:
    ordered = sorted(masks, key=lambda mask: (-mask.bit_count(), mask))
    kept: list[int] = []
    for mask in ordered:
        if not any(mask & ~other == 0 for other in kept):
            kept.append(mask)
    return kept


def _lower_faces(face: int, facet_bits: list[int]) -> set[int]:
    lower = {face & facet for facet in facet_bits if face & facet != face}
    return lower or {0}


@lru_cache(maxsize=256)
def _lattice(p: CombinatorialPolytope) -> _Lattice:
    """Close the facets under intersection and rank faces by longest chains."""
    facet_bits = [facet.bits for facet in p.facets_or_empty()]
    full = p.vertices.bits
    seen = {full, 0}
    pending = [full]
    while pending:
        face = pending.pop()
        for facet in facet_bits:
            lower = face & facet
            if lower not in seen:
                seen.add(lower)
                pending.append(lower)

    ranks = {0: 0}
    problems: list[tuple[str, str]] = []
    for face in sorted(seen, key=lambda mask: (mask.bit_count(), mask)):
        if face == 0:
            continue
        lower = _lower_faces(face, facet_bits)
        rank = 1 + max(ranks[mask] for mask in lower)
        ranks[face] = rank
        for cover in _maximal(lower):
            if ranks[cover] != rank - 1:
                problems.append(
                    (
                        "not-graded",
                        f"face {VertexSet(face).sorted()} of rank {rank} covers "
                        f"{VertexSet(cover).sorted()} of rank {ranks[cover]}",
                    )
                )
    if ranks[full] != p.dim + 1:
        problems.append(
            (
                "lattice-rank",
                f"face lattice has rank {ranks[full]}, expected {p.dim + 1}",
            )
        )
    for vertex in range(p.n_vertices):
        if ranks.get(1 << vertex) != 1:
            problems.append(("vertex-not-face", f"vertex {vertex} is not a face"))
    _LOGGER.debug("Face lattice of %s-polytope has %s faces", p.dim, len(ranks))
    return _Lattice(ranks, tuple(problems))


def _checked_lattice(p: CombinatorialPolytope) -> _Lattice:
    require_valid_incidences(p)
    lattice = _lattice(p)
    if lattice.problems:
        msg = "; ".join(message for _, message in lattice.problems)
        raise InvalidPolytopeError(msg)
    return lattice


def faces(p: CombinatorialPolytope) -> list[Face]:
    """Return every face, the empty face and P itself included, by dimension."""
    lattice = _checked_lattice(p)
    return [
        Face(VertexSet(mask), rank - 1)
        for mask, rank in sorted(
            lattice.ranks.items(),
            key=lambda item: (item[1], VertexSet(item[0]).sorted()),
        )
    ]


def face_dim(p: CombinatorialPolytope, vertices: VertexSet) -> int:
    """Return the dimension of a face given by its vertex set."""
    ranks = _checked_lattice(p).ranks
    if vertices.bits not in ranks:
        msg = f"{vertices.sorted()} is not a face"
        raise InvalidPolytopeError(msg)
    return ranks[vertices.bits] - 1


@lru_cache(maxsize=256)
def graph_of(p: CombinatorialPolytope) -> nx.Graph:
    """Return the graph of P: {u, v} is an edge iff its face closure is {u, v}.

    The closure is the intersection of all facets containing u and v, or the
    whole vertex set if no facet does (which makes the interval an edge).
    """
    require_valid_incidences(p)
    full = p.vertices.bits
    facet_bits = [facet.bits for facet in p.facets]
    graph = nx.Graph()
    graph.add_nodes_from(range(p.n_vertices))
    for u in range(p.n_vertices):
        for v in range(u + 1, p.n_vertices):
            pair = (1 << u) | (1 << v)
            closure = full
            for facet in facet_bits:
                if facet & pair == pair:
                    closure &= facet
            if closure == pair:
                graph.add_edge(u, v)
    return nx.freeze(graph)


def facets_of_face(p: CombinatorialPolytope, vertices: VertexSet) -> list[VertexSet]:
    """Return the facets of a face, in canonical order."""
    facet_bits = [facet.bits for facet in p.facets_or_empty()]
    lower = {vertices.bits & facet for facet in facet_bits} - {vertices.bits}
    return sorted((VertexSet(mask) for mask in _maximal(lower)), key=VertexSet.sorted)


def face_polytope(
    p: CombinatorialPolytope, vertices: VertexSet
) -> CombinatorialPolytope:
    """Return a face as a polytope whose vertex i is the i-th smallest face vertex."""
    dim = face_dim(p, vertices)
    labels = {old: new for new, old in enumerate(vertices.sorted())}
    facets = []
    if dim >= 1:
        facets = [
            VertexSet.of(labels[vertex] for vertex in facet)
            for facet in facets_of_face(p, vertices)
        ]
    return CombinatorialPolytope.from_facets(dim, len(vertices), facets)


def max_simplex_face_dim(p: CombinatorialPolytope) -> int:
    """Return the largest s such that P has an s-dimensional simplex face."""
    ranks = _checked_lattice(p).ranks
    return max(rank - 1 for mask, rank in ranks.items() if mask.bit_count() == rank)


def find_simplex_face(p: CombinatorialPolytope) -> Face:
    """Return a simplex face of dimension >= d - gamma.

    Descends through first facets; whenever a facet misses exactly one
    vertex the polytope is a pyramid over it and that apex is joined back.
    """
    _checked_lattice(p)
    facet_bits = [facet.bits for facet in p.facets_or_empty()]

    def descend(face: int, dim: int) -> tuple[int, int]:
        if face.bit_count() == dim + 1 or dim <= 0:
            return face, dim
        lower = _maximal({face & facet for facet in facet_bits if face & facet != face})
        first = min(lower, key=lambda mask: VertexSet(mask).sorted())
        if dim <= 2:
            return first, dim - 1
        inner, inner_dim = descend(first, dim - 1)
        face_gamma = face.bit_count() - dim - 1
        first_gamma = first.bit_count() - dim
        if first_gamma < face_gamma:
            return inner, inner_dim
        apex = face & ~first
        _LOGGER.debug(
            "Face %s is a pyramid with apex %s",
            VertexSet(face).sorted(),
            VertexSet(apex).sorted(),
        )
        return inner | apex, inner_dim + 1

    bits, dim = descend(p.vertices.bits, p.dim)
    return Face(VertexSet(bits), dim)


def is_simplicial(p: CombinatorialPolytope) -> bool:
    """Return True if every facet is a simplex."""
    return all(len(facet) == p.dim for facet in p.facets)


def vertex_facet_graph(p: CombinatorialPolytope) -> nx.Graph:
    """Return the bipartite vertex-facet incidence graph."""
    graph = nx.Graph()
    graph.add_nodes_from(
        (("v", vertex), {"kind": "vertex"}) for vertex in range(p.n_vertices)
    )
    for index, facet in enumerate(p.facets):
        graph.add_node(("f", index), kind="facet")
        graph.add_edges_from((("f", index), ("v", vertex)) for vertex in facet)
    return graph


def is_combinatorially_equivalent(
    p: CombinatorialPolytope, q: CombinatorialPolytope
) -> bool:
    """Return True if P and Q have isomorphic vertex-facet incidences."""
    if (p.dim, p.n_vertices, len(p.facets)) != (q.dim, q.n_vertices, len(q.facets)):
        return False
    return nx.is_isomorphic(
        vertex_facet_graph(p),
        vertex_facet_graph(q),
        node_match=lambda a, b: a["kind"] == b["kind"],
    )


def validate(p: CombinatorialPolytope) -> CheckReport:
    """Check every polytope invariant, connectivity >= dim included."""
    violations = [Violation(code, message) for code, message in check_incidences(p)]
    if violations:
        return CheckReport(tuple(violations))
    lattice = _lattice(p)
    violations += [Violation(code, message) for code, message in lattice.problems]
    if violations:
        return CheckReport(tuple(violations))
    if p.n_vertices >= 2:
        connectivity = vertex_connectivity(graph_of(p))
        if connectivity < p.dim:
            _LOGGER.warning(
                "Graph connectivity %s is below dimension %s", connectivity, p.dim
            )
            violations.append(
                Violation(
                    "connectivity",
                    f"graph is only {connectivity}-connected in dimension {p.dim}",
                )
            )
    return CheckReport(tuple(violations))
