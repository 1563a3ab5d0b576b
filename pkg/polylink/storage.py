"""Polytope files (JSON incidence tables) and graph edge lists."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any

import networkx as nx
import voluptuous as vol

from .exceptions import InvalidInputError, InvalidPolytopeError
from .graph import make_graph, order
from .polytope import CombinatorialPolytope, require_valid_incidences

if TYPE_CHECKING:
    from os import PathLike

_LOGGER = logging.getLogger(__name__)


def _integer(value: Any) -> int:
    """Accept an int; JSON true and false are not integers here."""
    if isinstance(value, bool) or not isinstance(value, int):
        msg = f"expected int, got {value!r}"
        raise vol.Invalid(msg)
    return value


_VERTEX = vol.All(_integer, vol.Range(min=0))

POLYTOPE_SCHEMA = vol.Schema(
    {
        vol.Required("dim"): vol.All(_integer, vol.Range(min=0)),
        vol.Required("n_vertices"): vol.All(_integer, vol.Range(min=1)),
        vol.Required("facets"): [[_VERTEX]],
    }
)


def polytope_to_json(p: CombinatorialPolytope) -> dict[str, Any]:
    """Return the canonical document: sorted facets in lexicographic order."""
    return {"dim": p.dim, "n_vertices": p.n_vertices, "facets": p.facet_lists()}


def polytope_from_json(document: Any) -> CombinatorialPolytope:
    """Validate a decoded document and build the polytope it describes."""
    try:
        data = POLYTOPE_SCHEMA(document)
    except vol.Invalid as exception:
        msg = f"Invalid polytope document: {exception}"
        raise InvalidPolytopeError(msg) from exception
    for facet in data["facets"]:
        if len(set(facet)) != len(facet):
            msg = f"Facet {facet} lists a vertex twice"
            raise InvalidPolytopeError(msg)
    polytope = CombinatorialPolytope.from_facets(
        data["dim"], data["n_vertices"], data["facets"]
    )
    require_valid_incidences(polytope)
    return polytope


def dumps_polytope(p: CombinatorialPolytope) -> str:
    """Serialize a polytope as canonical JSON text."""
    return json.dumps(polytope_to_json(p), separators=(", ", ": "))


def loads_polytope(text: str) -> CombinatorialPolytope:
    """Parse JSON text into a polytope."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exception:
        msg = f"Polytope file is not JSON: {exception}"
        raise InvalidPolytopeError(msg) from exception
    return polytope_from_json(document)


def load_polytope(path: str | PathLike[str]) -> CombinatorialPolytope:
    """Read a polytope file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exception:
        msg = f"Cannot read polytope file {path}: {exception}"
        raise InvalidInputError(msg) from exception
    polytope = loads_polytope(text)
    _LOGGER.debug(
        "Loaded %s-polytope with %s vertices from %s",
        polytope.dim,
        polytope.n_vertices,
        path,
    )
    return polytope


def dump_polytope(p: CombinatorialPolytope, path: str | PathLike[str]) -> None:
    """Write a polytope file."""
    Path(path).write_text(dumps_polytope(p) + "\n", encoding="utf-8")


def format_edge_list(graph: nx.Graph) -> str:
    """Return ``n`` on the first line, then one sorted ``u v`` edge per line."""
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges)
    lines = [str(order(graph))] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> nx.Graph:
    """Parse the edge-list format written by ``format_edge_list``."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        msg = "Edge list is empty"
        raise InvalidInputError(msg)
    try:
        n = int(lines[0])
        rows = [[int(token) for token in line.split()] for line in lines[1:]]
    except ValueError as exception:
        msg = f"Edge list has a non-integer entry: {exception}"
        raise InvalidInputError(msg) from exception
    edges: list[tuple[int, int]] = []
    for row in rows:
        if len(row) != 2:
            msg = f"Edge line {row} needs exactly two vertices"
            raise InvalidInputError(msg)
        edges.append((row[0], row[1]))
    return make_graph(n, edges)


def read_edge_list(path: str | PathLike[str]) -> nx.Graph:
    """Read a graph from an edge-list file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exception:
        msg = f"Cannot read edge list {path}: {exception}"
        raise InvalidInputError(msg) from exception
    return parse_edge_list(text)


def write_edge_list(graph: nx.Graph, path: str | PathLike[str]) -> None:
    """Write a graph as an edge-list file."""
    Path(path).write_text(format_edge_list(graph), encoding="utf-8")
