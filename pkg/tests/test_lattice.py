"""Tests for face lattices, graph extraction and simplex faces."""

from __future__ import annotations

import networkx as nx
import pytest

from polylink.exceptions import InvalidPolytopeError
from polylink.lattice import (
    face_dim,
    face_polytope,
    faces,
    find_simplex_face,
    graph_of,
    is_combinatorially_equivalent,
    is_simplicial,
    max_simplex_face_dim,
    validate,
)
from polylink.polytope import (
    CombinatorialPolytope,
    bipyramid,
    builtin,
    canonical_polytope,
    cross_polytope,
    direct_sum,
    join,
    pyramid,
    quadrilateral_join,
    simplex,
    stack,
)
from polylink.vertexset import VertexSet


@pytest.mark.parametrize(
    ("polytope", "count"),
    [
        (simplex(2), 8),
        (builtin("square"), 10),
        (pyramid(builtin("square")), 20),
        (simplex(3), 16),
    ],
)
def test_face_counts(polytope: CombinatorialPolytope, count: int) -> None:
    assert len(faces(polytope)) == count


def test_faces_are_ordered_by_dimension() -> None:
    dims = [face.dim for face in faces(pyramid(builtin("square")))]
    assert dims == sorted(dims)
    assert dims[0] == -1
    assert dims[-1] == 3


def test_simplex_graph_is_complete() -> None:
    assert nx.is_isomorphic(graph_of(simplex(5)), nx.complete_graph(6))


def test_interval_has_its_edge() -> None:
    assert list(graph_of(simplex(1)).edges) == [(0, 1)]


def test_square_graph_is_a_four_cycle() -> None:
    graph = graph_of(builtin("square"))
    assert graph.number_of_edges() == 4
    assert not graph.has_edge(0, 2)
    assert not graph.has_edge(1, 3)


def test_join_contains_every_cross_pair() -> None:
    graph = graph_of(join(builtin("square"), builtin("square")))
    assert graph.number_of_edges() == 24
    assert all(graph.has_edge(u, v) for u in range(4) for v in range(4, 8))


def test_sum_of_triangles_is_complete() -> None:
    graph = graph_of(direct_sum(simplex(2), simplex(2)))
    assert graph.number_of_edges() == 15


def test_octahedron_graph_misses_a_perfect_matching(
    octahedron: CombinatorialPolytope,
) -> None:
    missing = nx.complement(graph_of(octahedron))
    assert sorted(missing.edges) == [(0, 1), (2, 3), (4, 5)]


def test_graph_is_frozen() -> None:
    with pytest.raises(nx.NetworkXError):
        graph_of(simplex(2)).add_edge(0, 5)


@pytest.mark.parametrize(
    ("polytope", "expected"),
    [
        (simplex(4), 4),
        (stack(simplex(3), 1), 2),
        (builtin("square"), 1),
        (canonical_polytope(1, [(1, 2)]), 3),
        (quadrilateral_join(3, 2), 6),
    ],
)
def test_max_simplex_face_dim(polytope: CombinatorialPolytope, expected: int) -> None:
    assert max_simplex_face_dim(polytope) == expected


@pytest.mark.parametrize(
    "polytope",
    [
        builtin("square"),
        cross_polytope(3),
        pyramid(builtin("square")),
        pyramid(builtin("square"), 3),
        quadrilateral_join(3, 2),
        stack(pyramid(builtin("square")), 1),
        builtin("prism3"),
    ],
)
def test_find_simplex_face_is_large_enough(polytope: CombinatorialPolytope) -> None:
    face = find_simplex_face(polytope)
    assert face.is_simplex
    assert face.dim >= polytope.dim - polytope.gamma
    assert face_dim(polytope, face.vertices) == face.dim


def test_face_polytope_of_pyramid_base() -> None:
    base = face_polytope(pyramid(builtin("square")), VertexSet.of(range(4)))
    assert base == builtin("square")


def test_face_dim_rejects_non_faces() -> None:
    with pytest.raises(InvalidPolytopeError):
        face_dim(builtin("square"), VertexSet.of([0, 2]))


def test_bipyramid_over_triangle_is_stacked_tetrahedron() -> None:
    assert is_combinatorially_equivalent(
        bipyramid(simplex(2)), stack(simplex(3), 1)
    )
    assert not is_combinatorially_equivalent(simplex(4), cross_polytope(2))


def test_cross_two_is_the_square() -> None:
    assert is_combinatorially_equivalent(cross_polytope(2), builtin("square"))


def test_is_simplicial() -> None:
    assert is_simplicial(cross_polytope(3))
    assert not is_simplicial(pyramid(builtin("square")))


def test_validate_accepts_constructions() -> None:
    for polytope in (simplex(4), cross_polytope(4), quadrilateral_join(3, 2)):
        assert validate(polytope).ok


def test_validate_reports_a_duplicate_facet() -> None:
    report = validate(
        CombinatorialPolytope.from_facets(2, 3, [(0, 1), (1, 2), (0, 2), (0, 2)])
    )
    assert "duplicate-facet" in report.codes()


def test_validate_reports_vertices_that_are_not_faces() -> None:
    report = validate(
        CombinatorialPolytope.from_facets(2, 4, [(0, 1), (1, 2), (2, 3)])
    )
    assert not report.ok
    assert "vertex-not-face" in report.codes()


def test_faces_raise_on_invalid_lattice() -> None:
    with pytest.raises(InvalidPolytopeError):
        faces(CombinatorialPolytope.from_facets(2, 4, [(0, 1), (1, 2), (2, 3)]))
