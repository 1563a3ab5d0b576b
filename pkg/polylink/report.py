"""Text and JSON reports with stable field names."""

from __future__ import annotations

import json
from collections import Counter
from typing import TYPE_CHECKING, Any

from .bounds import (
    bounds_row,
    k_few_exact,
    k_few_lower_bound,
    k_gamma_upper_bound,
    k_lower_general,
    k_upper_bound,
)
from .cofacet import check_structure, cofacet_graph, cofacets, max_clique_size
from .const import (
    FIELD_CANONICAL_FORM,
    FIELD_CLASSIFICATION,
    FIELD_DIM,
    FIELD_F0,
    FIELD_GAMMA,
    FIELD_LINKEDNESS,
    FIELD_PAPER_DISCREPANCY,
    FIELD_WITNESS_PAIRING,
    FORMAT_JSON,
)
from .data import CaseStatus
from .graph import complement, vertex_connectivity
from .lattice import graph_of, is_simplicial, max_simplex_face_dim, validate
from .polytope import CombinatorialPolytope

if TYPE_CHECKING:
    from collections.abc import Sequence

    import networkx as nx

    from .data import (
        BoundsRow,
        CanonicalForm,
        CaseResult,
        CharacterizationPredicates,
        ClassificationResult,
        Linkage,
        LinkednessResult,
        Pairing,
    )


def _form(form: CanonicalForm | None) -> str | None:
    return str(form) if form is not None else None


def _pairing(pairing: Pairing | None) -> list[list[int]] | None:
    return pairing.as_json() if pairing is not None else None


def graph_json(graph: nx.Graph) -> dict[str, Any]:
    """Return the canonical JSON embedding of a graph."""
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges)
    return {"n": graph.number_of_nodes(), "edges": [list(edge) for edge in edges]}


def summary(p: CombinatorialPolytope) -> dict[str, Any]:
    """Return dim, f0 and gamma."""
    return {FIELD_DIM: p.dim, FIELD_F0: p.n_vertices, FIELD_GAMMA: p.gamma}


def analysis_report(
    p: CombinatorialPolytope, form: CanonicalForm | None
) -> dict[str, Any]:
    """Describe the graph, the complement and the facet complements of P."""
    graph = graph_of(p)
    other = complement(graph)
    isolated = [vertex for vertex, degree in other.degree if degree == 0]
    sizes = Counter(len(cofacet) for cofacet in cofacets(p))
    cofacet_report: dict[str, Any] = {
        "sizes": {str(size): count for size, count in sorted(sizes.items())},
        FIELD_CANONICAL_FORM: _form(form),
    }
    small = cofacet_graph(p)
    if small is not None:
        cofacet_report["loops"] = list(small.loops.sorted())
        cofacet_report["edges"] = [list(edge) for edge in sorted(small.edges)]
        cofacet_report["violations"] = [
            violation.as_json() for violation in check_structure(small).violations
        ]
    return {
        **summary(p),
        "facets": len(p.facets),
        "simplicial": is_simplicial(p),
        "connectivity": vertex_connectivity(graph) if p.n_vertices > 1 else 0,
        "max_simplex_face_dim": max_simplex_face_dim(p),
        "max_clique": max_clique_size(p),
        "validation": [violation.as_json() for violation in validate(p).violations],
        "complement": {
            "isolated": isolated,
            "edges": graph_json(other)["edges"],
        },
        "cofacets": cofacet_report,
        "graph": graph_json(graph),
    }


def linkedness_report(
    source: CombinatorialPolytope | nx.Graph,
    result: LinkednessResult,
    *,
    witness: bool,
) -> dict[str, Any]:
    """Report k(G), with the failing pairing for k + 1 when asked.

    A polytope source contributes dim, f0 and gamma; a bare graph only n.
    """
    if isinstance(source, CombinatorialPolytope):
        head = summary(source)
    else:
        head = {"n": source.number_of_nodes()}
    report = {**head, FIELD_LINKEDNESS: result.k, "capped": result.capped}
    if witness:
        report[FIELD_WITNESS_PAIRING] = _pairing(result.witness)
    return report


def link_report(
    pairing: Pairing,
    exact: Linkage | None,
    methods: dict[str, Linkage | str],
    *,
    consistent: bool,
) -> dict[str, Any]:
    """Report the exact linkage and each constructive method's outcome."""
    return {
        "pairing": pairing.as_json(),
        "linked": exact is not None,
        "exact": exact.as_json() if exact is not None else None,
        "methods": {
            name: outcome if isinstance(outcome, str) else outcome.as_json()
            for name, outcome in methods.items()
        },
        "consistent": consistent,
    }


def classification_report(
    p: CombinatorialPolytope,
    result: ClassificationResult,
    predicates: CharacterizationPredicates,
    witness: Pairing | None,
) -> dict[str, Any]:
    """Report the predicates, the canonical form and the extremal case."""
    large = [list(c.sorted()) for c in cofacets(p) if len(c) > 2]
    report = {
        **summary(p),
        "predicates": {
            "small_cofacets": predicates.small_cofacets,
            "canonical": predicates.canonical,
            "no_big_simplex": predicates.no_big_simplex,
        },
        FIELD_CANONICAL_FORM: _form(result.canonical_form),
        FIELD_CLASSIFICATION: str(result.classification),
        FIELD_LINKEDNESS: result.linkedness,
        "lower_bound": result.lower_bound,
        FIELD_WITNESS_PAIRING: _pairing(witness),
        "max_clique": max_clique_size(p),
        "exact_range": k_few_exact(p.dim, p.gamma) is not None,
        "violating_cofacet": large[0] if large else None,
    }
    if result.witness_facet is not None:
        report["witness_facet"] = list(result.witness_facet.sorted())
        report["facet_form"] = _form(result.facet_form)
    if result.note:
        report["note"] = result.note
    return report


def row_json(row: BoundsRow) -> dict[str, Any]:
    """Return a table row."""
    return {
        "d": row.d,
        "lower": row.lower,
        "upper": row.upper,
        "exact": row.exact,
        "values": row.values(),
        FIELD_PAPER_DISCREPANCY: row.paper_discrepancy,
    }


def bounds_report(d: int, gamma: int | None = None) -> dict[str, Any]:
    """Report every bound that applies to d (and gamma)."""
    report = {
        **row_json(bounds_row(d)),
        "k_lower_general": k_lower_general(d),
        "k_upper_bound": k_upper_bound(d),
    }
    if gamma is not None:
        report[FIELD_GAMMA] = gamma
        report["k_few_lower_bound"] = k_few_lower_bound(d, gamma)
        report["k_few_exact"] = k_few_exact(d, gamma)
        if gamma >= 1 and d >= 2:
            report["k_gamma_upper_bound"] = k_gamma_upper_bound(d, gamma)
    return report


def table_report(rows: Sequence[BoundsRow]) -> dict[str, Any]:
    """Report the k(d) table."""
    return {"rows": [row_json(row) for row in rows]}


def verify_report(suite: str, results: Sequence[CaseResult]) -> dict[str, Any]:
    """Report every case and the per-status totals."""
    totals = Counter(str(result.status) for result in results)
    return {
        "suite": suite,
        "totals": {str(status): totals.get(str(status), 0) for status in CaseStatus},
        "cases": [result.as_json() for result in results],
    }


def _text_lines(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, dict) and item:
                lines.append(f"{pad}{key}:")
                lines += _text_lines(item, indent + 1)
            elif isinstance(item, list) and item and isinstance(item[0], dict):
                lines.append(f"{pad}{key}:")
                for entry in item:
                    fields = ", ".join(f"{k}={v}" for k, v in entry.items())
                    lines.append(f"{pad}  - {fields}")
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _scalar(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return json.dumps(value)
    return str(value)


def render(report: dict[str, Any], output_format: str) -> str:
    """Render a report as JSON or as indented ``key: value`` text."""
    if output_format == FORMAT_JSON:
        return json.dumps(report, indent=2)
    return "\n".join(_text_lines(report))
