"""Facet complements: structure checks, canonical recognition and classification."""

from __future__ import annotations

import logging

import networkx as nx

from .bounds import k_few_exact, k_few_lower_bound, k_pnm
from .data import (
    CanonicalForm,
    CharacterizationPredicates,
    CheckReport,
    Classification,
    ClassificationResult,
    CofacetGraph,
    Violation,
)
from .exceptions import (
    InvalidInputError,
    StructuralDefectError,
    TheoremViolationError,
)
from .graph import maximum_clique
from .lattice import (
    face_polytope,
    graph_of,
    is_combinatorially_equivalent,
    max_simplex_face_dim,
)
from .linkage import linkedness
from .polytope import (
    CombinatorialPolytope,
    canonical_polytope,
    require_valid_incidences,
)
from .vertexset import VertexSet

_LOGGER = logging.getLogger(__name__)

CASE_III_NOTE = (
    "witness facet recognised as P(n + 5; 1,1 x (m - 2)); the literature writes "
    "the facet as simplex(n - 2) joined with m - 2 squares, which has the wrong "
    "dimension for a facet"
)


def cofacets(p: CombinatorialPolytope) -> list[VertexSet]:
    """Return V(P) minus V(F) for every facet F, in facet order."""
    require_valid_incidences(p)
    return [p.vertices - facet for facet in p.facets]


def cofacet_graph(p: CombinatorialPolytope) -> CofacetGraph | None:
    """Return loops and edges from cofacets of size 1 and 2; None if one is larger."""
    complements = cofacets(p)
    if any(len(complement) > 2 for complement in complements):
        return None
    if len(set(complements)) != len(complements):
        msg = "Two facets have the same complement"
        raise InvalidInputError(msg)
    loops = VertexSet.empty()
    edges: set[tuple[int, int]] = set()
    for complement in complements:
        members = complement.sorted()
        if len(members) == 1:
            loops |= complement
        else:
            edges.add((members[0], members[1]))
    return CofacetGraph(p.n_vertices, loops, frozenset(edges))


def _edge_graph(graph: CofacetGraph) -> nx.Graph:
    edges = nx.Graph()
    edges.add_nodes_from(range(graph.n))
    edges.add_edges_from(graph.edges)
    return edges


def check_structure(graph: CofacetGraph) -> CheckReport:
    """Check the structure every polytope's cofacet graph has.

    Loops sit only on vertices without edges, no vertex has degree one,
    every vertex lies in some cofacet, there are no odd cycles, and every
    path v1 v2 v3 v4 closes with the edge v1 v4.
    """
    violations: list[Violation] = []
    edges = _edge_graph(graph)
    for vertex in range(graph.n):
        degree = graph.degree(vertex)
        if vertex in graph.loops and edges.degree(vertex):
            violations.append(
                Violation("loop-not-isolated", f"loop at {vertex} has edges", (vertex,))
            )
        if degree == 1:
            violations.append(
                Violation("degree-one", f"vertex {vertex} has degree one", (vertex,))
            )
        if degree == 0 and graph.n > 1:
            violations.append(
                Violation("uncovered", f"vertex {vertex} is in no cofacet", (vertex,))
            )
    for component in nx.connected_components(edges):
        if not nx.is_bipartite(edges.subgraph(component)):
            cycle = [u for u, _ in nx.find_cycle(edges.subgraph(component))]
            violations.append(
                Violation("odd-cycle", "cofacet graph has an odd cycle", tuple(cycle))
            )
    reported: set[tuple[int, ...]] = set()
    for v2, v3 in list(edges.edges) + [(b, a) for a, b in edges.edges]:
        for v1 in edges.neighbors(v2):
            for v4 in edges.neighbors(v3):
                if len({v1, v2, v3, v4}) < 4 or edges.has_edge(v1, v4):
                    continue
                path = min((v1, v2, v3, v4), (v4, v3, v2, v1))
                if path not in reported:
                    reported.add(path)
                    violations.append(
                        Violation(
                            "path-closure", f"path {path} is not closed", path
                        )
                    )
    return CheckReport(tuple(violations))


def _matches_canonical(
    p: CombinatorialPolytope, form: CanonicalForm, order: list[int]
) -> bool:
    """Compare P with canonical_polytope(form) relabelled in cofacet order.

    order lists the loop vertices, then the smaller and larger part of each
    bipartite component in the order of form.pairs.
    """
    candidate = canonical_polytope(form.n, form.pairs)
    if len(order) == p.n_vertices:
        label = {vertex: index for index, vertex in enumerate(order)}
        relabelled = sorted(
            VertexSet.of(label[vertex] for vertex in facet).sorted()
            for facet in p.facets
        )
        if relabelled == [facet.sorted() for facet in candidate.facets]:
            return True
    _LOGGER.debug("Cofacet labelling misses %s; trying an isomorphism", form)
    return is_combinatorially_equivalent(candidate, p)


def recognize_canonical(p: CombinatorialPolytope) -> CanonicalForm | None:
    """Return the parameters of P as a canonical polytope, or None.

    Loop vertices give the simplex factor; every other component of the
    cofacet graph must be complete bipartite with parts of sizes j + 1 and
    k + 1, giving the factor simplex(j) (+) simplex(k).
    """
    require_valid_incidences(p)
    if p.dim == 0:
        return CanonicalForm(1)
    graph = cofacet_graph(p)
    if graph is None:
        return None
    report = check_structure(graph)
    if not report.ok:
        _LOGGER.debug("Cofacet structure fails: %s", sorted(report.codes()))
        return None
    edges = _edge_graph(graph)
    parts: list[tuple[list[int], list[int]]] = []
    for component in nx.connected_components(edges):
        if len(component) == 1:
            continue
        sub = edges.subgraph(component)
        first, second = nx.bipartite.sets(sub)
        if sub.number_of_edges() != len(first) * len(second):
            msg = f"Cofacet component {sorted(component)} is not complete bipartite"
            raise StructuralDefectError(msg)
        if len(first) < 2 or len(second) < 2:
            msg = f"Cofacet component {sorted(component)} has a part of size one"
            raise StructuralDefectError(msg)
        small, large = sorted((sorted(first), sorted(second)), key=len)
        parts.append((small, large))
    parts.sort(key=lambda part: (len(part[0]), len(part[1])))
    form = CanonicalForm.normalized(
        len(graph.loops), [(len(small) - 1, len(large) - 1) for small, large in parts]
    )
    if (form.dim, form.n_vertices) != (p.dim, p.n_vertices):
        msg = f"{form} has dimension {form.dim}, the polytope has {p.dim}"
        raise StructuralDefectError(msg)
    order = list(graph.loops.sorted())
    for small, large in parts:
        order += small + large
    if not _matches_canonical(p, form, order):
        msg = f"Polytope does not match its recognised form {form}"
        raise StructuralDefectError(msg)
    return form


def characterization_predicates(
    p: CombinatorialPolytope,
) -> CharacterizationPredicates:
    """Evaluate the three equivalent small-cofacet conditions."""
    small = all(len(complement) <= 2 for complement in cofacets(p))
    try:
        canonical = recognize_canonical(p) is not None
    except StructuralDefectError:
        _LOGGER.warning("Recognition hit a structural defect", exc_info=True)
        canonical = False
    no_big_simplex = max_simplex_face_dim(p) <= p.dim - p.gamma
    predicates = CharacterizationPredicates(small, canonical, no_big_simplex)
    if not predicates.agree():
        _LOGGER.warning("Small-cofacet conditions disagree: %s", predicates)
    return predicates


def max_clique_size(p: CombinatorialPolytope) -> int:
    """Return the size of a largest clique in the graph of P."""
    return len(maximum_clique(graph_of(p)))


def _quadrilateral_form(n: int, m: int) -> CanonicalForm:
    return CanonicalForm(n, ((1, 1),) * m)


def _case_three(
    p: CombinatorialPolytope, n: int, m: int, k: int
) -> tuple[VertexSet, CanonicalForm] | None:
    """Return a facet missing three vertices that is itself an extremal join."""
    if m < 2:
        return None
    expected = _quadrilateral_form(n + 5, m - 2)
    for facet in p.facets:
        if len(p.vertices - facet) != 3:
            continue
        form = recognize_canonical(face_polytope(p, facet))
        if form == expected and k_pnm(expected.n, expected.m) == k:
            return facet, form
    return None


def classify_extremal(
    p: CombinatorialPolytope, k: int | None = None
) -> ClassificationResult:
    """Decide which extremal shape P has, if it meets the few-vertex bound.

    With n = d - 3 gamma + 1 and m = gamma: in even d - gamma the only shape
    is the quadrilateral join P(n; 1,1 x m). In odd d - gamma it may also be
    P(n - 1; 1,1 x (m - 1), 1,2), or have a facet missing three vertices
    that is P(n + 5; 1,1 x (m - 2)) with the same linkedness.
    """
    require_valid_incidences(p)
    d, gamma = p.dim, p.gamma
    if k is None:
        k = linkedness(graph_of(p)).k
    if gamma > d:
        bound = (d - gamma + 1) // 2
        return ClassificationResult(Classification.NOT_EXTREMAL, k, bound)
    bound = k_few_lower_bound(d, gamma)
    if k > bound:
        return ClassificationResult(Classification.NOT_EXTREMAL, k, bound)
    if k < bound:
        msg = f"Linkedness {k} is below the lower bound {bound}"
        raise TheoremViolationError(msg)
    if k_few_exact(d, gamma) is None:
        _LOGGER.info("gamma = %s exceeds (d + 2) / 5 yet P meets the bound", gamma)

    n, m = d - 3 * gamma + 1, gamma
    form = recognize_canonical(p)
    if form is not None and form == _quadrilateral_form(n, m):
        return ClassificationResult(Classification.CASE_I, k, bound, form)
    if (d - gamma) % 2 == 0:
        msg = f"Extremal polytope with even d - gamma has form {form}"
        raise TheoremViolationError(msg)
    second = CanonicalForm.normalized(n - 1, [(1, 1)] * (m - 1) + [(1, 2)])
    if m >= 1 and form == second:
        return ClassificationResult(Classification.CASE_II, k, bound, form)
    found = _case_three(p, n, m, k)
    if found is not None:
        facet, facet_form = found
        return ClassificationResult(
            Classification.CASE_III,
            k,
            bound,
            form,
            witness_facet=facet,
            facet_form=facet_form,
            note=CASE_III_NOTE,
        )
    msg = f"Extremal polytope (k={k}, d={d}, gamma={gamma}) matches no shape"
    raise TheoremViolationError(msg)

