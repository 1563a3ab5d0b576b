"""Verification suites: one list of cases per checked property."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from .bounds import (
    crosspolytope_family_k,
    crosspolytope_family_pairing,
    crosspolytope_family_witness,
    failing_pairing_pnm,
    k_few_lower_bound,
    k_lower_general,
    k_pnm,
    k_table,
    k_upper_bound,
    minimal_linkedness_witness,
    pyramid_stack_pairing,
    pyramid_stack_witness,
)
from .cofacet import characterization_predicates, classify_extremal, recognize_canonical
from .const import SUITE_ALL, SUITES, TABLE_MAX_DIM
from .corpus import (
    CROSS_FAMILY_DIMENSIONS,
    PYRAMID_STACK_PARAMETERS,
    canonical_parameters,
    corpus,
    corpus_expressions,
    pnm_parameters,
    stacked_expressions,
)
from .data import CanonicalForm, CaseOutcome, Classification, SuiteCase
from .exceptions import InvalidInputError, PreconditionError
from .expression import build
from .graph import complement, vertex_connectivity
from .lattice import graph_of
from .linkage import all_pairings, disjoint_paths, linkedness
from .polytope import canonical_polytope, quadrilateral_join
from .subdivision import (
    check_subdivision,
    find_rooted_subdivision,
    simplex_face_linkage,
    subdivision_linkage,
)

if TYPE_CHECKING:
    from collections.abc import Callable

    import networkx as nx

    from .config import PolylinkConfig
    from .data import Pairing

_LOGGER = logging.getLogger(__name__)

# Published k(d) ranges for d = 1..15; row 15 is the corrected one.
TABLE_EXPECTED = {
    1: (1, 1),
    2: (1, 1),
    3: (1, 1),
    4: (2, 2),
    5: (2, 2),
    6: (2, 3),
    7: (3, 3),
    8: (3, 3),
    9: (3, 4),
    10: (4, 4),
    11: (4, 5),
    12: (4, 5),
    13: (5, 5),
    14: (5, 6),
    15: (5, 6),
}
CORRECTED_ROW = 15

CLASSIFICATION_SPOT_CHECKS = (
    ("square", Classification.CASE_I, 1),
    ("Pnm(3, 2)", Classification.CASE_I, 3),
    ("P(1; 1,2)", Classification.CASE_II, 2),
    ("join(interval, cross(3))", Classification.CASE_III, 2),
    ("pyr(prism3, 2)", Classification.CASE_III, 2),
    ("pyr(stack(simplex(3), 2), 2)", Classification.NOT_EXTREMAL, 3),
)


def sampled_pairings(n: int, k: int, size: int) -> list[Pairing]:
    """Return ``size`` k-pairings at an even stride, or all of them if fewer."""
    pairings = list(all_pairings(n, k))
    if len(pairings) <= size:
        return pairings
    return [pairings[index * len(pairings) // size] for index in range(size)]


def _graph(text: str) -> tuple[nx.Graph, int, int]:
    polytope = build(text)
    return graph_of(polytope), polytope.dim, polytope.gamma


def check_pnm_linkedness(n: int, m: int) -> CaseOutcome:
    """Exact linkedness of P(n, m) equals the closed formula."""
    graph = graph_of(quadrilateral_join(n, m))
    expected = k_pnm(n, m)
    result = linkedness(graph)
    failing = failing_pairing_pnm(n, m)
    defeated = failing is None or disjoint_paths(graph, failing) is None
    return CaseOutcome.check(
        result.k == expected and defeated,
        f"k = {result.k}, formula {expected}",
        linkedness=result.k,
        expected=expected,
        witness_pairing=str(failing) if failing else None,
    )


def check_connectivity(text: str) -> CaseOutcome:
    """The graph of a d-polytope is d-connected."""
    graph, dim, _ = _graph(text)
    if graph.number_of_nodes() < 2:
        return CaseOutcome.skipped("a point has no connectivity")
    connectivity = vertex_connectivity(graph)
    return CaseOutcome.check(
        connectivity >= dim,
        f"connectivity {connectivity}, dimension {dim}",
        connectivity=connectivity,
        dim=dim,
    )


def check_rooted_subdivisions(text: str) -> CaseOutcome:
    """Every vertex of a d-polytope roots a subdivision of K_{d+1}."""
    graph, dim, _ = _graph(text)
    for root in graph.nodes:
        subdivision = find_rooted_subdivision(graph, root, dim + 1)
        if subdivision is None:
            return CaseOutcome.check(False, f"no rooted K_{dim + 1} at {root}")
        report = check_subdivision(graph, subdivision)
        if not report.ok:
            return CaseOutcome.check(
                False, f"subdivision at {root} is invalid: {sorted(report.codes())}"
            )
    return CaseOutcome.check(True, f"K_{dim + 1} at all {len(graph)} vertices")


def check_general_linkage(text: str, sample: int) -> CaseOutcome:
    """Route floor((d + 2) / 3) pairs through a rooted subdivision."""
    graph, dim, _ = _graph(text)
    if dim < 1:
        return CaseOutcome.skipped("dimension 0")
    k = k_lower_general(dim)
    if len(graph) < 2 * k or vertex_connectivity(graph) < 2 * k:
        return CaseOutcome.skipped(f"graph is not {2 * k}-connected")
    checked = missing = 0
    for pairing in sampled_pairings(len(graph), k, sample):
        try:
            linkage = subdivision_linkage(graph, pairing)
        except PreconditionError as exception:
            _LOGGER.info("Pairing %s skipped: %s", pairing, exception)
            missing += 1
            continue
        checked += 1
        if disjoint_paths(graph, pairing) is None:
            return CaseOutcome.check(
                False,
                f"exact search found no linkage for {pairing}",
                linkage=linkage.as_json(),
            )
    return CaseOutcome.check(
        missing == 0,
        f"{checked} pairings of size {k} linked",
        k=k,
        pairings=checked,
        precondition_misses=missing,
    )


def check_simplex_face_linkage(text: str, sample: int) -> CaseOutcome:
    """Route floor((d - gamma + 1) / 2) pairs into a large simplex face."""
    polytope = build(text)
    graph = graph_of(polytope)
    if polytope.gamma > polytope.dim:
        return CaseOutcome.skipped("gamma exceeds the dimension")
    k = k_few_lower_bound(polytope.dim, polytope.gamma)
    if k < 1 or len(graph) < 2 * k:
        return CaseOutcome.skipped(f"no {k}-pairings")
    pairings = sampled_pairings(len(graph), k, sample)
    for pairing in pairings:
        simplex_face_linkage(polytope, pairing)
        if disjoint_paths(graph, pairing) is None:
            return CaseOutcome.check(
                False, f"exact search found no linkage for {pairing}"
            )
    return CaseOutcome.check(
        True, f"{len(pairings)} pairings of size {k} linked", k=k
    )


def check_pyramid_stack_witness(d: int, gamma: int) -> CaseOutcome:
    """The stacked square pyramid is not (floor(d / 2) + 1)-linked."""
    polytope = pyramid_stack_witness(d, gamma)
    pairing = pyramid_stack_pairing(d, gamma)
    shape_ok = (polytope.dim, polytope.n_vertices) == (d, d + gamma + 1)
    size_ok = len(pairing) == d // 2 + 1
    unlinked = disjoint_paths(graph_of(polytope), pairing) is None
    return CaseOutcome.check(
        shape_ok and size_ok and unlinked,
        f"pairing {pairing} {'has no' if unlinked else 'has a'} linkage",
        witness_pairing=str(pairing),
    )


def check_crosspolytope_family(d: int) -> CaseOutcome:
    """The crosspolytope family member defeats its (k + 1)-pairing."""
    polytope = crosspolytope_family_witness(d)
    if d % 4 == 0:
        f0 = 6 * (d - 8) // 4 + 11
    else:
        f0 = 6 * (d - 13) // 4 + 17
    k = crosspolytope_family_k(d)
    pairing = crosspolytope_family_pairing(d)
    unlinked = disjoint_paths(graph_of(polytope), pairing) is None
    return CaseOutcome.check(
        polytope.dim == d and polytope.n_vertices == f0 and unlinked,
        f"f0 = {polytope.n_vertices}, claimed k = {k}",
        k=k,
        witness_pairing=str(pairing),
    )


def check_recognition(n: int, pairs: tuple[tuple[int, int], ...]) -> CaseOutcome:
    """Recognition returns the normalized parameters of a canonical polytope."""
    expected = CanonicalForm.normalized(n, pairs)
    form = recognize_canonical(canonical_polytope(n, pairs))
    return CaseOutcome.check(form == expected, f"recognised {form}")


def check_not_canonical(text: str) -> CaseOutcome:
    """A polytope with a facet missing three vertices is not canonical."""
    form = recognize_canonical(build(text))
    return CaseOutcome.check(form is None, f"recognised {form}")


def check_predicates(text: str) -> CaseOutcome:
    """The three small-cofacet conditions agree."""
    predicates = characterization_predicates(build(text))
    return CaseOutcome.check(
        predicates.agree(),
        str(predicates),
        small_cofacets=predicates.small_cofacets,
        canonical=predicates.canonical,
        no_big_simplex=predicates.no_big_simplex,
    )


def check_classification(
    text: str, expected: Classification, k: int
) -> CaseOutcome:
    """Spot-check the extremal classification; ``k`` is a minimum when not extremal."""
    result = classify_extremal(build(text))
    if expected is Classification.NOT_EXTREMAL:
        k_ok = result.linkedness >= k
    else:
        k_ok = result.linkedness == k
    return CaseOutcome.check(
        result.classification is expected and k_ok,
        f"{result.classification} with k = {result.linkedness}",
        classification=str(result.classification),
        linkedness=result.linkedness,
    )


def check_table() -> CaseOutcome:
    """Generated k(d) ranges match the published ones, row 15 corrected."""
    mismatched = [
        row.d
        for row in k_table(TABLE_MAX_DIM)
        if (row.lower, row.upper) != TABLE_EXPECTED[row.d]
        or (row.paper_discrepancy is not None) != (row.d == CORRECTED_ROW)
    ]
    return CaseOutcome.check(not mismatched, f"mismatched rows: {mismatched}")


def check_minimal_witness(d: int) -> CaseOutcome:
    """The quadrilateral-join witness has dimension d and meets the upper bound."""
    witness = minimal_linkedness_witness(d)
    gamma = (d + 2) // 5
    value = k_pnm(d - 3 * gamma + 1, gamma)
    return CaseOutcome.check(
        witness.dim == d and value == k_upper_bound(d),
        f"k = {value}, upper bound {k_upper_bound(d)}",
    )


def check_complement(n: int, m: int) -> CaseOutcome:
    """The complement of G(P(n, m)) is n isolated vertices and 2m disjoint edges."""
    graph = complement(graph_of(quadrilateral_join(n, m)))
    degrees = [degree for _, degree in graph.degree]
    isolated = degrees.count(0)
    ok = (
        isolated == n
        and graph.number_of_edges() == 2 * m
        and all(degree <= 1 for degree in degrees)
    )
    return CaseOutcome.check(
        ok, f"{isolated} isolated, {graph.number_of_edges()} edges"
    )


def _corpus_cases(
    suite: str, config: PolylinkConfig, check: Callable[..., CaseOutcome], *extra: int
) -> list[SuiteCase]:
    cap = config.vertex_cap(suite)
    expressions = corpus_expressions()
    return [
        SuiteCase(suite, name, check, (expressions[name], *extra))
        for name, _ in corpus(cap)
    ]


def _pnm_cases(
    suite: str, config: PolylinkConfig, check: Callable[..., CaseOutcome]
) -> list[SuiteCase]:
    return [
        SuiteCase(suite, f"P({n},{m})", check, (n, m))
        for n, m in pnm_parameters(config.vertex_cap(suite))
    ]


def _upper_witness_cases(config: PolylinkConfig) -> list[SuiteCase]:
    cap = config.vertex_cap("upper-witness")
    cases = [
        SuiteCase(
            "upper-witness",
            f"pyramid-stack-{d}-{gamma}",
            check_pyramid_stack_witness,
            (d, gamma),
        )
        for d, gamma in PYRAMID_STACK_PARAMETERS
        if d + gamma + 1 <= cap
    ]
    for d in CROSS_FAMILY_DIMENSIONS:
        if crosspolytope_family_witness(d).n_vertices <= cap:
            cases.append(
                SuiteCase(
                    "upper-witness",
                    f"cross-family-{d}",
                    check_crosspolytope_family,
                    (d,),
                )
            )
    return cases


def _cofacet_cases(config: PolylinkConfig) -> list[SuiteCase]:
    cap = config.vertex_cap("cofacet")
    recognition_cap = min(cap, 12)
    cases = [
        SuiteCase("cofacet", f"recognise-{n}-{pairs}", check_recognition, (n, pairs))
        for n, pairs in canonical_parameters(recognition_cap)
    ]
    cases += [
        SuiteCase("cofacet", f"not-canonical-{name}", check_not_canonical, (text,))
        for name, text in stacked_expressions().items()
    ]
    cases += _corpus_cases("cofacet", config, check_predicates)
    return cases


def _classification_cases(config: PolylinkConfig) -> list[SuiteCase]:
    cap = config.vertex_cap("classification")
    return [
        SuiteCase("classification", text, check_classification, (text, expected, k))
        for text, expected, k in CLASSIFICATION_SPOT_CHECKS
        if build(text).n_vertices <= cap
    ]


def _table_cases(_config: PolylinkConfig) -> list[SuiteCase]:
    cases = [SuiteCase("table", "k-table", check_table)]
    cases += [
        SuiteCase("table", f"minimal-witness-{d}", check_minimal_witness, (d,))
        for d in range(1, TABLE_MAX_DIM + 1)
    ]
    return cases


SUITE_BUILDERS: dict[str, Callable[[PolylinkConfig], list[SuiteCase]]] = {
    "pnm-linkedness": lambda config: _pnm_cases(
        "pnm-linkedness", config, check_pnm_linkedness
    ),
    "connectivity": lambda config: _corpus_cases(
        "connectivity", config, check_connectivity
    ),
    "rooted-subdivision": lambda config: _corpus_cases(
        "rooted-subdivision", config, check_rooted_subdivisions
    ),
    "general-linkage": lambda config: _corpus_cases(
        "general-linkage", config, check_general_linkage, config.pairing_sample
    ),
    "simplex-face-linkage": lambda config: _corpus_cases(
        "simplex-face-linkage",
        config,
        check_simplex_face_linkage,
        config.pairing_sample,
    ),
    "upper-witness": _upper_witness_cases,
    "cofacet": _cofacet_cases,
    "classification": _classification_cases,
    "table": _table_cases,
    "complement": lambda config: _pnm_cases("complement", config, check_complement),
}


def build_cases(suite: str, config: PolylinkConfig) -> list[SuiteCase]:
    """Return the cases of a suite, or of every suite for ``all``."""
    if suite == SUITE_ALL:
        return [case for name in SUITES for case in SUITE_BUILDERS[name](config)]
    if suite not in SUITE_BUILDERS:
        msg = f"Unknown suite {suite!r}; choose from {', '.join(SUITES)} or all"
        raise InvalidInputError(msg)
    cases = SUITE_BUILDERS[suite](config)
    _LOGGER.debug("Suite %s has %s cases", suite, len(cases))
    return cases
