"""Tests for running verification cases."""

from __future__ import annotations

import time

import pytest

from polylink.coordinator import VerificationCoordinator, run_case
from polylink.data import CaseOutcome, CaseStatus, SuiteCase
from polylink.deadline import current_deadline
from polylink.exceptions import InvalidInputError
from polylink.suites import check_complement, check_table


def _passes() -> CaseOutcome:
    return CaseOutcome.check(True, "fine", answer=42)


def _fails() -> CaseOutcome:
    return CaseOutcome.check(False, "wrong")


def _raises() -> CaseOutcome:
    msg = "bad case"
    raise InvalidInputError(msg)


def test_run_case_passes_outcome_through() -> None:
    result = run_case(3, SuiteCase("demo", "pass", _passes), None)
    assert result.index == 3
    assert result.status is CaseStatus.PASSED
    assert result.data == {"answer": 42}
    assert result.as_json()["status"] == "passed"


def test_run_case_reports_failures() -> None:
    assert run_case(0, SuiteCase("demo", "fail", _fails), None).status is (
        CaseStatus.FAILED
    )


def test_library_errors_fail_the_case(caplog: pytest.LogCaptureFixture) -> None:
    result = run_case(0, SuiteCase("demo", "raise", _raises), None)
    assert result.status is CaseStatus.FAILED
    assert result.detail == "InvalidInputError: bad case"
    assert "demo/raise raised" in caplog.text


def test_expired_deadline_times_out() -> None:
    result = run_case(0, SuiteCase("demo", "late", _passes), time.monotonic() - 1)
    assert result.status is CaseStatus.TIMEOUT
    assert current_deadline() is None


def test_inline_run_keeps_order() -> None:
    cases = [
        SuiteCase("demo", "a", _passes),
        SuiteCase("demo", "b", _fails),
        SuiteCase("demo", "c", _passes),
    ]
    results = VerificationCoordinator().run(cases)
    assert [result.name for result in results] == ["a", "b", "c"]
    assert [result.status for result in results] == [
        CaseStatus.PASSED,
        CaseStatus.FAILED,
        CaseStatus.PASSED,
    ]


def test_worker_count_is_at_least_one() -> None:
    assert VerificationCoordinator(0).workers == 1


def test_process_pool_matches_inline_run() -> None:
    cases = [
        SuiteCase("complement", f"P({n},{m})", check_complement, (n, m))
        for n, m in [(2, 0), (0, 1), (3, 2), (1, 1)]
    ]
    cases.append(SuiteCase("table", "k-table", check_table))
    pooled = VerificationCoordinator(2).run(cases)
    inline = VerificationCoordinator().run(cases)
    assert [result.index for result in pooled] == list(range(len(cases)))
    assert [result.status for result in pooled] == [
        result.status for result in inline
    ]
    assert all(result.status is CaseStatus.PASSED for result in pooled)
