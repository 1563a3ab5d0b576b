"""Tests for rooted subdivisions and the constructive linkage algorithms."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from polylink.data import Pairing, RootedSubdivision
from polylink.exceptions import InvalidInputError, PreconditionError
from polylink.graph import complete_graph, make_graph
from polylink.lattice import graph_of
from polylink.linkage import all_pairings, validate_linkage
from polylink.polytope import (
    builtin,
    pyramid,
    quadrilateral_join,
    simplex,
    stack,
)
from polylink.subdivision import (
    check_subdivision,
    find_rooted_subdivision,
    simplex_face_linkage,
    subdivision_linkage,
)
from polylink.suites import sampled_pairings

if TYPE_CHECKING:
    from polylink.polytope import CombinatorialPolytope


def test_complete_graph_subdivision_uses_single_edges() -> None:
    graph = complete_graph(6)
    subdivision = find_rooted_subdivision(graph, 2, 5)
    assert subdivision is not None
    assert subdivision.branch == (2, 0, 1, 3, 4)
    assert not subdivision.subdividing_vertices()
    assert check_subdivision(graph, subdivision).ok


def test_octahedron_roots_a_k4(octahedron: CombinatorialPolytope) -> None:
    graph = graph_of(octahedron)
    subdivision = find_rooted_subdivision(graph, 0, 4)
    assert subdivision is not None
    assert subdivision.root == 0
    assert len(subdivision.branch) == 4
    assert check_subdivision(graph, subdivision).ok


def test_square_pyramid_base_vertex_is_subdivided() -> None:
    graph = graph_of(pyramid(builtin("square")))
    subdivision = find_rooted_subdivision(graph, 0, 4)
    assert subdivision is not None
    assert subdivision.branch == (0, 1, 3, 4)
    assert subdivision.path(1, 3) == (1, 2, 3)
    assert subdivision.subdividing_vertices() == {2}


def test_every_vertex_roots_a_full_subdivision(prism: CombinatorialPolytope) -> None:
    graph = graph_of(prism)
    for root in graph.nodes:
        subdivision = find_rooted_subdivision(graph, root, prism.dim + 1)
        assert subdivision is not None
        assert check_subdivision(graph, subdivision).ok


def test_path_graph_has_no_rooted_triangle() -> None:
    assert find_rooted_subdivision(make_graph(3, [(0, 1), (1, 2)]), 1, 3) is None


def test_trivial_and_invalid_requests() -> None:
    graph = complete_graph(3)
    assert find_rooted_subdivision(graph, 1, 1) == RootedSubdivision(1, (1,))
    with pytest.raises(InvalidInputError):
        find_rooted_subdivision(graph, 5, 2)
    with pytest.raises(InvalidInputError):
        find_rooted_subdivision(graph, 0, 0)


def test_check_subdivision_flags_defects() -> None:
    graph = make_graph(3, [(0, 1)])
    bogus = RootedSubdivision(0, (0, 1, 2), (((0, 1), (0, 1)), ((1, 2), (1, 2))))
    codes = check_subdivision(graph, bogus).codes()
    assert {"branch-neighbour", "path-edge", "missing-path"} <= codes


def test_subdivision_linkage_on_complete_graph() -> None:
    graph = complete_graph(6)
    pairing = Pairing.of([(0, 1), (2, 3)])
    linkage = subdivision_linkage(graph, pairing)
    assert validate_linkage(graph, pairing, linkage)


def test_subdivision_linkage_on_example_polytope() -> None:
    polytope = quadrilateral_join(1, 2)
    graph = graph_of(polytope)
    for pairing in sampled_pairings(polytope.n_vertices, 2, 25):
        linkage = subdivision_linkage(graph, pairing)
        assert validate_linkage(graph, pairing, linkage)


def test_subdivision_linkage_needs_connectivity() -> None:
    graph = graph_of(pyramid(builtin("square")))
    with pytest.raises(PreconditionError):
        subdivision_linkage(graph, Pairing.of([(4, 0), (1, 3)]))


def test_simplex_face_linkage_in_a_simplex() -> None:
    polytope = simplex(5)
    for pairing in all_pairings(6, 3):
        linkage = simplex_face_linkage(polytope, pairing)
        assert validate_linkage(graph_of(polytope), pairing, linkage)


def test_simplex_face_linkage_routes_into_the_face() -> None:
    polytope = pyramid(builtin("square"), 3)
    pairing = Pairing.of([(0, 2), (1, 3)])
    linkage = simplex_face_linkage(polytope, pairing)
    assert validate_linkage(graph_of(polytope), pairing, linkage)


def test_simplex_face_linkage_on_stacked_witness() -> None:
    polytope = pyramid(stack(pyramid(builtin("square")), 1), 3)
    graph = graph_of(polytope)
    for pairing in sampled_pairings(polytope.n_vertices, 2, 30):
        linkage = simplex_face_linkage(polytope, pairing)
        assert validate_linkage(graph, pairing, linkage)


def test_simplex_face_linkage_rejects_too_many_pairs() -> None:
    polytope = pyramid(builtin("square"), 3)
    with pytest.raises(PreconditionError):
        simplex_face_linkage(polytope, Pairing.of([(0, 1), (2, 3), (4, 5)]))


@pytest.mark.slow
def test_simplex_face_linkage_on_example_d8(example_d8: CombinatorialPolytope) -> None:
    graph = graph_of(example_d8)
    for pairing in sampled_pairings(example_d8.n_vertices, 3, 50):
        linkage = simplex_face_linkage(example_d8, pairing)
        assert validate_linkage(graph, pairing, linkage)
