"""Runs verification cases inline or in a process pool."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import TYPE_CHECKING

from .data import CaseResult, CaseStatus
from .deadline import check_deadline, current_deadline, deadline_at
from .exceptions import PolylinkError, SearchTimeoutError

if TYPE_CHECKING:
    from collections.abc import Sequence

    from .data import SuiteCase

_LOGGER = logging.getLogger(__name__)


def run_case(index: int, case: SuiteCase, deadline: float | None) -> CaseResult:
    """Run one case, turning library errors into a failed result.

    Module-level so worker processes can unpickle it; the deadline travels
    as an absolute monotonic timestamp.
    """
    started = time.monotonic()
    try:
        with deadline_at(deadline):
            check_deadline()
            outcome = case.check(*case.args)
    except SearchTimeoutError as exception:
        status, detail, data = CaseStatus.TIMEOUT, str(exception), {}
    except PolylinkError as exception:
        _LOGGER.warning("Case %s/%s raised: %s", case.suite, case.name, exception)
        status = CaseStatus.FAILED
        detail = f"{type(exception).__name__}: {exception}"
        data = {}
    else:
        status, detail, data = outcome.status, outcome.detail, outcome.data
    return CaseResult(
        index,
        case.suite,
        case.name,
        status,
        detail,
        data,
        seconds=time.monotonic() - started,
    )


class VerificationCoordinator:
    """Class to manage running verification cases."""

    def __init__(self, workers: int = 1) -> None:
        """Initialize the coordinator; one worker means run inline."""
        self.workers = max(1, workers)

    def run(self, cases: Sequence[SuiteCase]) -> list[CaseResult]:
        """Run every case and return the results in case-index order."""
        deadline = current_deadline()
        _LOGGER.info("Running %s cases with %s worker(s)", len(cases), self.workers)
        if self.workers == 1 or len(cases) <= 1:
            results = []
            for index, case in enumerate(cases):
                result = run_case(index, case, deadline)
                self._log_result(result)
                results.append(result)
            return results
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            futures = [
                executor.submit(run_case, index, case, deadline)
                for index, case in enumerate(cases)
            ]
            results = [future.result() for future in futures]
        for result in results:
            self._log_result(result)
        return sorted(results, key=lambda result: result.index)

    @staticmethod
    def _log_result(result: CaseResult) -> None:
        if result.status is CaseStatus.FAILED:
            _LOGGER.warning(
                "%s/%s failed: %s", result.suite, result.name, result.detail
            )
        else:
            _LOGGER.debug(
                "%s/%s %s in %.2fs",
                result.suite,
                result.name,
                result.status,
                result.seconds,
            )
