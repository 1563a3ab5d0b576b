"""Tests for disjoint paths, k-linkedness and exact linkedness."""

from __future__ import annotations

from typing import TYPE_CHECKING

import networkx as nx
import pytest

from polylink.bounds import k_pnm
from polylink.corpus import corpus, pnm_parameters
from polylink.data import Linkage, Pairing
from polylink.exceptions import InvalidInputError, InvalidPairingError
from polylink.graph import complete_graph, make_graph, vertex_connectivity
from polylink.lattice import graph_of
from polylink.linkage import (
    all_pairings,
    complement_pairing,
    disjoint_paths,
    is_k_linked,
    linkedness,
    validate_linkage,
)
from polylink.polytope import builtin, cross_polytope, pyramid, quadrilateral_join

if TYPE_CHECKING:
    from polylink.polytope import CombinatorialPolytope


def test_pairing_endpoints_must_be_distinct() -> None:
    with pytest.raises(InvalidPairingError):
        Pairing.of([(0, 1), (1, 2)])


def test_pairing_parse() -> None:
    assert Pairing.parse("0:1, 2:3") == Pairing(((0, 1), (2, 3)))
    assert str(Pairing.parse("4:5")) == "4:5"
    for text in ("", "0-1", "0:x"):
        with pytest.raises(InvalidPairingError):
            Pairing.parse(text)


def test_complete_graph_links_single_edges() -> None:
    linkage = disjoint_paths(complete_graph(4), Pairing.of([(0, 1), (2, 3)]))
    assert linkage == Linkage(((0, 1), (2, 3)))


def test_square_diagonals_cannot_be_linked() -> None:
    graph = graph_of(builtin("square"))
    assert disjoint_paths(graph, Pairing.of([(0, 2), (1, 3)])) is None


def test_octahedron_routes_through_the_third_antipodal_pair(
    octahedron: CombinatorialPolytope,
) -> None:
    graph = graph_of(octahedron)
    pairing = Pairing.of([(0, 1), (2, 3)])
    linkage = disjoint_paths(graph, pairing)
    assert linkage is not None
    assert validate_linkage(graph, pairing, linkage)
    assert {path[1] for path in linkage} == {4, 5}


def test_terminals_must_be_vertices() -> None:
    with pytest.raises(InvalidPairingError):
        disjoint_paths(complete_graph(3), Pairing.of([(0, 7)]))


def test_validate_linkage_rejects_shared_vertices() -> None:
    graph = complete_graph(5)
    pairing = Pairing.of([(0, 1), (2, 3)])
    assert validate_linkage(graph, pairing, Linkage(((0, 1), (2, 3))))
    assert not validate_linkage(graph, pairing, Linkage(((0, 4, 1), (2, 4, 3))))
    assert not validate_linkage(graph, pairing, Linkage(((0, 1),)))
    assert not validate_linkage(
        graph_of(builtin("square")),
        Pairing.of([(0, 2)]),
        Linkage(((0, 2),)),
    )


def test_all_pairings_counts_and_order() -> None:
    first = list(all_pairings(4, 2))
    assert [pairing.pairs for pairing in first] == [
        ((0, 1), (2, 3)),
        ((0, 2), (1, 3)),
        ((0, 3), (1, 2)),
    ]
    assert sum(1 for _ in all_pairings(6, 2)) == 45
    assert next(iter(all_pairings(6, 2))).pairs == ((0, 1), (2, 3))
    with pytest.raises(InvalidInputError):
        list(all_pairings(4, 0))


def test_is_k_linked_on_complete_graph() -> None:
    assert is_k_linked(complete_graph(6), 3)
    assert not is_k_linked(complete_graph(5), 3)


def test_square_pyramid_witness_is_the_square_diagonals() -> None:
    result = is_k_linked(graph_of(pyramid(builtin("square"))), 2)
    assert not result
    assert result.witness == Pairing.of([(0, 2), (1, 3)])


def test_example_d8_is_not_four_linked(example_d8_graph: nx.Graph) -> None:
    assert not is_k_linked(example_d8_graph, 4)


def test_complement_pairing_matches_diagonals_first(
    example_d8_graph: nx.Graph,
) -> None:
    pairing = complement_pairing(example_d8_graph, 4)
    assert pairing == Pairing.of([(3, 4), (5, 6), (7, 8), (9, 10)])
    assert complement_pairing(example_d8_graph, 5) == Pairing.of(
        [(3, 4), (5, 6), (7, 8), (9, 10), (0, 1)]
    )
    assert complement_pairing(example_d8_graph, 6) is None


@pytest.mark.parametrize(("d", "expected"), [(1, 1), (2, 1), (4, 2), (5, 3)])
def test_simplex_linkedness(d: int, expected: int) -> None:
    assert linkedness(complete_graph(d + 1)).k == expected


def test_square_linkedness_has_diagonal_witness() -> None:
    result = linkedness(graph_of(builtin("square")))
    assert result.k == 1
    assert result.witness == Pairing.of([(0, 2), (1, 3)])
    assert not result.capped


def test_octahedron_is_two_linked(octahedron: CombinatorialPolytope) -> None:
    assert linkedness(graph_of(octahedron)).k == 2


def test_example_d8_linkedness(example_d8_graph: nx.Graph) -> None:
    result = linkedness(example_d8_graph)
    assert result.k == 3
    assert result.witness is not None
    assert len(result.witness) == 4
    assert disjoint_paths(example_d8_graph, result.witness) is None


def test_max_k_caps_the_search(example_d8_graph: nx.Graph) -> None:
    result = linkedness(example_d8_graph, max_k=1)
    assert (result.k, result.capped, result.witness) == (1, True, None)


def test_disconnected_and_tiny_graphs_have_linkedness_zero() -> None:
    assert linkedness(make_graph(4, [(0, 1), (2, 3)])).k == 0
    assert linkedness(complete_graph(1)).k == 0


def test_linkedness_is_invariant_under_relabelling() -> None:
    graph = graph_of(cross_polytope(3))
    relabelled = nx.relabel_nodes(graph, {v: (v + 3) % 6 for v in graph.nodes})
    assert linkedness(relabelled).k == linkedness(graph).k


@pytest.mark.parametrize(("n", "m"), pnm_parameters(8))
def test_quadrilateral_join_formula_small(n: int, m: int) -> None:
    assert linkedness(graph_of(quadrilateral_join(n, m))).k == k_pnm(n, m)


@pytest.mark.slow
@pytest.mark.parametrize(
    ("n", "m"), [pair for pair in pnm_parameters(12) if 4 * pair[1] + pair[0] > 8]
)
def test_quadrilateral_join_formula(n: int, m: int) -> None:
    assert linkedness(graph_of(quadrilateral_join(n, m))).k == k_pnm(n, m)


SMALL_CORPUS = corpus(max_vertices=8)


@pytest.mark.parametrize(
    ("name", "polytope"), SMALL_CORPUS, ids=[name for name, _ in SMALL_CORPUS]
)
def test_linkedness_is_monotone_and_needs_connectivity(
    name: str, polytope: CombinatorialPolytope
) -> None:
    graph = graph_of(polytope)
    top = linkedness(graph).k
    connectivity = vertex_connectivity(graph)
    for k in range(1, top + 2):
        linked = is_k_linked(graph, k).linked
        assert linked == (k <= top), name
        if linked:
            assert connectivity >= 2 * k - 1, name
            if k > 1:
                assert is_k_linked(graph, k - 1).linked, name
