"""Tests for polytope files and edge lists."""

from __future__ import annotations

from typing import TYPE_CHECKING

import networkx as nx
import pytest

from polylink.exceptions import InvalidInputError, InvalidPolytopeError
from polylink.graph import make_graph
from polylink.lattice import graph_of
from polylink.polytope import builtin, quadrilateral_join, simplex
from polylink.storage import (
    dump_polytope,
    dumps_polytope,
    format_edge_list,
    load_polytope,
    loads_polytope,
    parse_edge_list,
    polytope_from_json,
    polytope_to_json,
    read_edge_list,
    write_edge_list,
)

if TYPE_CHECKING:
    from pathlib import Path


def test_interval_document_is_canonical() -> None:
    assert dumps_polytope(simplex(1)) == (
        '{"dim": 1, "n_vertices": 2, "facets": [[0], [1]]}'
    )


def test_facets_are_sorted() -> None:
    document = polytope_to_json(builtin("square"))
    assert document["facets"] == [[0, 1], [0, 3], [1, 2], [2, 3]]


def test_document_round_trip() -> None:
    polytope = quadrilateral_join(3, 2)
    assert loads_polytope(dumps_polytope(polytope)) == polytope


def test_file_round_trip(tmp_path: Path) -> None:
    path = tmp_path / "square.json"
    dump_polytope(builtin("square"), path)
    assert path.read_text(encoding="utf-8").endswith("}\n")
    assert load_polytope(path) == builtin("square")


@pytest.mark.parametrize(
    "document",
    [
        {"dim": 2, "n_vertices": 3},
        {"dim": -1, "n_vertices": 3, "facets": [[0, 1]]},
        {"dim": 2, "n_vertices": 3, "facets": [[0, "x"]]},
        {"dim": 2, "n_vertices": 3, "facets": [[0, 0], [1, 2], [0, 2]]},
        {"dim": 2, "n_vertices": 3, "facets": [[0, 1], [1, 2], [0, 2]], "x": 1},
        {"dim": True, "n_vertices": 2, "facets": [[0], [1]]},
        {"dim": 1, "n_vertices": 2, "facets": [[False], [True]]},
        [],
    ],
)
def test_invalid_documents(document: object) -> None:
    with pytest.raises(InvalidPolytopeError):
        polytope_from_json(document)


def test_incidence_defects_are_rejected() -> None:
    with pytest.raises(InvalidPolytopeError):
        polytope_from_json({"dim": 2, "n_vertices": 4, "facets": [[0, 1], [1, 2]]})


def test_text_that_is_not_json() -> None:
    with pytest.raises(InvalidPolytopeError):
        loads_polytope("{dim: 2")


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(InvalidInputError):
        load_polytope(tmp_path / "missing.json")


def test_format_edge_list() -> None:
    graph = make_graph(4, [(2, 1), (0, 1), (3, 2)])
    assert format_edge_list(graph) == "4\n0 1\n1 2\n2 3\n"


def test_parse_edge_list_skips_comments_and_blank_lines() -> None:
    graph = parse_edge_list("# a path\n3\n\n0 1\n  1 2  \n")
    assert graph.number_of_nodes() == 3
    assert sorted(graph.edges) == [(0, 1), (1, 2)]


def test_isolated_vertices_survive_the_edge_list() -> None:
    graph = parse_edge_list(format_edge_list(make_graph(5, [(0, 4)])))
    assert sorted(graph.nodes) == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("text", ["", "# only a comment\n", "3\n0 x\n", "3\n0 1 2\n"])
def test_bad_edge_lists(text: str) -> None:
    with pytest.raises(InvalidInputError):
        parse_edge_list(text)


def test_edge_list_file_round_trip(tmp_path: Path) -> None:
    graph = graph_of(quadrilateral_join(3, 2))
    path = tmp_path / "graph.txt"
    write_edge_list(graph, path)
    loaded = read_edge_list(path)
    assert sorted(loaded.nodes) == sorted(graph.nodes)
    assert nx.utils.edges_equal(loaded.edges, graph.edges)


def test_missing_edge_list(tmp_path: Path) -> None:
    with pytest.raises(InvalidInputError):
        read_edge_list(tmp_path / "missing.txt")
