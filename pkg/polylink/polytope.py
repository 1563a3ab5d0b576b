"""Combinatorial polytopes given by vertex-facet incidences, and constructions."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import TYPE_CHECKING

from .exceptions import InvalidInputError, InvalidPolytopeError
from .vertexset import VertexSet

if TYPE_CHECKING:
    from collections.abc import Iterable

_LOGGER = logging.getLogger(__name__)


def _facet_key(facet: VertexSet) -> tuple[int, ...]:
    return facet.sorted()


@dataclass(frozen=True)
class CombinatorialPolytope:
    """A d-polytope up to combinatorial type: dimension, f0 and facet sets."""

    dim: int
    n_vertices: int
    facets: tuple[VertexSet, ...]

    @classmethod
    def from_facets(
        cls, dim: int, n_vertices: int, facets: Iterable[Iterable[int]]
    ) -> CombinatorialPolytope:
        """Build a polytope with facets in canonical (lexicographic) order."""
        sets = [
            facet if isinstance(facet, VertexSet) else VertexSet.of(facet)
            for facet in facets
        ]
        return cls(dim, n_vertices, tuple(sorted(sets, key=_facet_key)))

    @property
    def gamma(self) -> int:
        """Return f0 - d - 1."""
        return self.n_vertices - self.dim - 1

    @property
    def vertices(self) -> VertexSet:
        """Return V(P)."""
        return VertexSet.full(self.n_vertices)

    def facets_or_empty(self) -> tuple[VertexSet, ...]:
        """Return the facets, with a point's single facet being the empty face."""
        if self.dim == 0:
            return (VertexSet.empty(),)
        return self.facets

    def simplex_facets(self) -> list[VertexSet]:
        """Return the facets with exactly dim vertices, in canonical order."""
        return [facet for facet in self.facets if len(facet) == self.dim]

    def facet_lists(self) -> list[list[int]]:
        """Return facets as sorted vertex lists in canonical order."""
        return [list(facet.sorted()) for facet in sorted(self.facets, key=_facet_key)]


def simplex(d: int) -> CombinatorialPolytope:
    """Return the d-simplex; its facets are all d-subsets of d + 1 vertices."""
    if d < 0:
        msg = f"Simplex dimension must be >= 0, got {d}"
        raise InvalidInputError(msg)
    if d == 0:
        return CombinatorialPolytope(0, 1, ())
    return CombinatorialPolytope.from_facets(d, d + 1, combinations(range(d + 1), d))


def join(p: CombinatorialPolytope, q: CombinatorialPolytope) -> CombinatorialPolytope:
    """Return P * Q; Q's vertices are renumbered after P's."""
    offset = p.n_vertices
    q_all = q.vertices.shifted(offset)
    facets = [facet | q_all for facet in p.facets_or_empty()]
    facets += [p.vertices | facet.shifted(offset) for facet in q.facets_or_empty()]
    return CombinatorialPolytope.from_facets(
        p.dim + q.dim + 1, p.n_vertices + q.n_vertices, facets
    )


def direct_sum(
    p: CombinatorialPolytope, q: CombinatorialPolytope
) -> CombinatorialPolytope:
    """Return P (+) Q, whose facets are unions of a facet of P and one of Q."""
    if p.dim < 1 or q.dim < 1:
        msg = "Direct sum is only defined for summands of dimension >= 1"
        raise InvalidInputError(msg)
    offset = p.n_vertices
    facets = [f | g.shifted(offset) for f in p.facets for g in q.facets]
    return CombinatorialPolytope.from_facets(
        p.dim + q.dim, p.n_vertices + q.n_vertices, facets
    )


def pyramid(p: CombinatorialPolytope, t: int = 1) -> CombinatorialPolytope:
    """Return the t-fold pyramid over P."""
    if t < 0:
        msg = f"Pyramid count must be >= 0, got {t}"
        raise InvalidInputError(msg)
    result = p
    for _ in range(t):
        result = join(result, simplex(0))
    return result


def bipyramid(p: CombinatorialPolytope) -> CombinatorialPolytope:
    """Return the bipyramid P (+) I."""
    return direct_sum(p, simplex(1))


def stack(p: CombinatorialPolytope, t: int = 1) -> CombinatorialPolytope:
    """Stack t new vertices, each over the lexicographically smallest simplex facet."""
    if t < 0:
        msg = f"Stacking count must be >= 0, got {t}"
        raise InvalidInputError(msg)
    if t and p.dim < 2:
        msg = f"Stacking needs dimension >= 2, got {p.dim}"
        raise InvalidInputError(msg)
    result = p
    for _ in range(t):
        candidates = result.simplex_facets()
        if not candidates:
            msg = "Cannot stack: the polytope has no simplex facet"
            raise InvalidInputError(msg)
        target = candidates[0]
        apex = result.n_vertices
        replacement = [
            (target - VertexSet.of([w])) | VertexSet.of([apex]) for w in target
        ]
        _LOGGER.debug("Stacking vertex %s over facet %s", apex, target.sorted())
        facets = [facet for facet in result.facets if facet != target] + replacement
        result = CombinatorialPolytope.from_facets(result.dim, apex + 1, facets)
    return result


def canonical_polytope(
    n: int, pairs: Iterable[tuple[int, int]] = ()
) -> CombinatorialPolytope:
    """Return simplex(n - 1) joined with the sums simplex(j_i) (+) simplex(k_i)."""
    pairs = list(pairs)
    if n < 0:
        msg = f"Number of pyramid vertices must be >= 0, got {n}"
        raise InvalidInputError(msg)
    for j, k in pairs:
        if j < 1 or k < 1:
            msg = f"Sum parameters must be >= 1, got ({j}, {k})"
            raise InvalidInputError(msg)
    factors = [simplex(n - 1)] if n else []
    factors += [direct_sum(simplex(j), simplex(k)) for j, k in pairs]
    if not factors:
        msg = "Empty construction: need n >= 1 or at least one pair"
        raise InvalidInputError(msg)
    return reduce(join, factors)


def quadrilateral_join(n: int, m: int) -> CombinatorialPolytope:
    """Return simplex(n - 1) joined with m quadrilaterals."""
    if m < 0:
        msg = f"Number of quadrilaterals must be >= 0, got {m}"
        raise InvalidInputError(msg)
    return canonical_polytope(n, [(1, 1)] * m)


def cross_polytope(d: int) -> CombinatorialPolytope:
    """Return the d-crosspolytope; antipodal vertices are 2i and 2i + 1."""
    if d < 1:
        msg = f"Crosspolytope dimension must be >= 1, got {d}"
        raise InvalidInputError(msg)
    return reduce(direct_sum, [simplex(1)] * d)


_SQUARE = CombinatorialPolytope.from_facets(2, 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
_PRISM3 = CombinatorialPolytope.from_facets(
    3,
    6,
    [(0, 1, 2), (3, 4, 5), (0, 1, 3, 4), (1, 2, 4, 5), (0, 2, 3, 5)],
)

BUILTIN_ATOMS = ("point", "interval", "square", "prism3")


def builtin(name: str, d: int | None = None) -> CombinatorialPolytope:
    """Return a named polytope: point, interval, square, prism3 or cross(d)."""
    if name == "point":
        return simplex(0)
    if name == "interval":
        return simplex(1)
    if name == "square":
        return _SQUARE
    if name == "prism3":
        return _PRISM3
    if name == "cross":
        if d is None:
            msg = "cross needs a dimension"
            raise InvalidInputError(msg)
        return cross_polytope(d)
    msg = f"Unknown builtin polytope: {name}"
    raise InvalidInputError(msg)


def check_incidences(p: CombinatorialPolytope) -> list[tuple[str, str]]:
    """Return (code, message) for every violated incidence-table invariant."""
    problems: list[tuple[str, str]] = []
    if p.dim < 0:
        problems.append(("dimension", f"dimension {p.dim} is negative"))
    if p.n_vertices < 1:
        problems.append(("vertex-count", f"vertex count {p.n_vertices} is below 1"))
        return problems
    if p.gamma < 0:
        problems.append(("gamma", f"f0 = {p.n_vertices} is below dim + 1"))
    full = p.vertices
    seen: set[VertexSet] = set()
    for facet in p.facets:
        if not facet <= full:
            problems.append(("range", f"facet {facet.sorted()} leaves [0, f0)"))
        if facet == full:
            problems.append(("full-facet", "a facet equals the full vertex set"))
        if facet in seen:
            problems.append(("duplicate-facet", f"facet {facet.sorted()} repeats"))
        seen.add(facet)
    distinct = list(seen)
    for first in distinct:
        for second in distinct:
            if first < second:
                problems.append(
                    (
                        "nested-facets",
                        f"facet {first.sorted()} lies inside {second.sorted()}",
                    )
                )
    if p.dim >= 1:
        covered = reduce(lambda acc, facet: acc | facet, p.facets, VertexSet.empty())
        for vertex in full - covered:
            problems.append(("uncovered-vertex", f"vertex {vertex} is in no facet"))
    elif p.n_vertices != 1:
        problems.append(("point", "a 0-polytope has exactly one vertex"))
    return problems


def require_valid_incidences(p: CombinatorialPolytope) -> None:
    """Raise InvalidPolytopeError if the incidence table is malformed."""
    problems = check_incidences(p)
    if problems:
        msg = "; ".join(message for _, message in problems)
        raise InvalidPolytopeError(msg)
