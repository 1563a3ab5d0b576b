"""Tests for report rendering."""

from __future__ import annotations

import json

from polylink.const import FORMAT_JSON, FORMAT_TEXT
from polylink.data import CaseResult, CaseStatus
from polylink.graph import make_graph
from polylink.polytope import builtin, quadrilateral_join
from polylink.report import (
    analysis_report,
    bounds_report,
    graph_json,
    render,
    summary,
    verify_report,
)


def test_graph_json_sorts_edges() -> None:
    graph = make_graph(3, [(2, 1), (1, 0)])
    assert graph_json(graph) == {"n": 3, "edges": [[0, 1], [1, 2]]}


def test_summary_fields() -> None:
    assert summary(quadrilateral_join(3, 2)) == {"dim": 8, "f0": 11, "gamma": 2}


def test_analysis_of_the_square() -> None:
    report = analysis_report(builtin("square"), None)
    assert report["connectivity"] == 2
    assert report["simplicial"]
    assert report["cofacets"]["sizes"] == {"2": 4}
    assert report["cofacets"]["canonical_form"] is None
    assert report["validation"] == []


def test_bounds_report_without_gamma_has_no_gamma_fields() -> None:
    report = bounds_report(9)
    assert report["values"] == [3, 4]
    assert "gamma" not in report


def test_verify_report_counts_every_status() -> None:
    results = [
        CaseResult(0, "table", "a", CaseStatus.PASSED),
        CaseResult(1, "table", "b", CaseStatus.SKIPPED, "n/a"),
    ]
    report = verify_report("table", results)
    assert report["totals"] == {"passed": 1, "failed": 0, "skipped": 1, "timeout": 0}
    assert [case["name"] for case in report["cases"]] == ["a", "b"]


def test_render_json_and_text() -> None:
    report = {"d": 6, "exact": None, "nested": {"ok": True}, "rows": [{"a": 1}]}
    assert json.loads(render(report, FORMAT_JSON)) == report
    assert render(report, FORMAT_TEXT).splitlines() == [
        "d: 6",
        "exact: none",
        "nested:",
        "  ok: true",
        "rows:",
        "  - a=1",
    ]
