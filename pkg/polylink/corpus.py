"""Named example constructions and parameter grids for the verification suites."""

from __future__ import annotations

import logging
from itertools import combinations_with_replacement
from typing import TYPE_CHECKING

from .expression import build

if TYPE_CHECKING:
    from .polytope import CombinatorialPolytope

_LOGGER = logging.getLogger(__name__)

CORPUS = {
    "interval": "interval",
    "triangle": "simplex(2)",
    "square": "square",
    "tetrahedron": "simplex(3)",
    "square-pyramid": "pyr(square)",
    "triangular-bipyramid": "stack(simplex(3), 1)",
    "twice-stacked-tetrahedron": "stack(simplex(3), 2)",
    "octahedron": "cross(3)",
    "triangular-prism": "prism3",
    "simplex-4": "simplex(4)",
    "simplex-5": "simplex(5)",
    "cross-4": "cross(4)",
    "bipyramid-over-tetrahedron": "bipyr(simplex(3))",
    "triangle-sum-triangle": "sum(simplex(2), simplex(2))",
    "pyramid-over-edge-sum-triangle": "P(1; 1,2)",
    "pyr3-square": "pyr(square, 3)",
    "square-join-square": "join(square, square)",
    "interval-join-octahedron": "join(interval, cross(3))",
    "pyr2-prism": "pyr(prism3, 2)",
    "pyr2-twice-stacked-tetrahedron": "pyr(stack(simplex(3), 2), 2)",
    "triangle-join-two-squares": "join(simplex(2), square, square)",
    "quadrilateral-join-5-2": "Pnm(5, 2)",
    "cross-family-12": "join(simplex(2), square, square, cross(3))",
    "cross-family-13": "join(simplex(4), square, square, square)",
}

PYRAMID_STACK_PARAMETERS = ((3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (6, 2))
CROSS_FAMILY_DIMENSIONS = (8, 12, 13)


def pyramid_stack_expression(d: int, gamma: int) -> str:
    """Return the expression of the stacked square pyramid witness."""
    return f"pyr(stack(pyr(square), {gamma - 1}), {d - 3})"


def corpus_expressions() -> dict[str, str]:
    """Return every named construction, pyramid-stack witnesses included."""
    expressions = dict(CORPUS)
    for d, gamma in PYRAMID_STACK_PARAMETERS:
        expressions[f"pyramid-stack-{d}-{gamma}"] = pyramid_stack_expression(d, gamma)
    return expressions


def corpus(max_vertices: int | None = None) -> list[tuple[str, CombinatorialPolytope]]:
    """Build the corpus, keeping entries with at most ``max_vertices`` vertices."""
    entries = []
    for name, text in corpus_expressions().items():
        polytope = build(text)
        if max_vertices is not None and polytope.n_vertices > max_vertices:
            _LOGGER.debug("Skipping %s: %s vertices", name, polytope.n_vertices)
            continue
        entries.append((name, polytope))
    return entries


def pnm_parameters(max_size: int = 12) -> list[tuple[int, int]]:
    """Return every (n, m) with 2 <= 4m + n <= max_size, ordered by m then n."""
    return [
        (n, m)
        for m in range(max_size // 4 + 1)
        for n in range(max_size - 4 * m + 1)
        if 4 * m + n >= 2
    ]


def canonical_parameters(
    max_vertices: int = 12,
) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """Return every normalized (n, pairs) whose canonical polytope is small enough.

    Pairs (j, k) have 1 <= j <= k and the list is sorted, so each
    combinatorial type appears once.
    """
    options = [
        (j, k)
        for j in range(1, max_vertices)
        for k in range(j, max_vertices)
        if j + k + 2 <= max_vertices
    ]
    parameters = []
    for m in range(max_vertices // 4 + 1):
        for pairs in combinations_with_replacement(options, m):
            used = sum(j + k + 2 for j, k in pairs)
            if used > max_vertices:
                continue
            for n in range(max_vertices - used + 1):
                if n or pairs:
                    parameters.append((n, pairs))
    return parameters


def stacked_expressions() -> dict[str, str]:
    """Return constructions with a facet missing three or more vertices."""
    name = "twice-stacked-tetrahedron"
    expressions = {name: CORPUS[name]}
    for d, gamma in PYRAMID_STACK_PARAMETERS:
        if gamma >= 2:
            expressions[f"pyramid-stack-{d}-{gamma}"] = pyramid_stack_expression(
                d, gamma
            )
    return expressions
