"""Cooperative time limits for exhaustive searches."""

from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from contextvars import ContextVar
from typing import TYPE_CHECKING

from .exceptions import SearchTimeoutError

if TYPE_CHECKING:
    from collections.abc import Iterator

_LOGGER = logging.getLogger(__name__)

_DEADLINE: ContextVar[float | None] = ContextVar("polylink_deadline", default=None)


@contextmanager
def time_limit(seconds: float | None) -> Iterator[None]:
    """Bound every search started inside the block to ``seconds``."""
    if seconds is None:
        yield
        return
    if seconds <= 0:
        msg = f"Time limit must be positive, got {seconds}"
        raise ValueError(msg)
    token = _DEADLINE.set(time.monotonic() + seconds)
    try:
        yield
    finally:
        _DEADLINE.reset(token)


@contextmanager
def deadline_at(timestamp: float | None) -> Iterator[None]:
    """Install an absolute monotonic deadline (used by worker processes)."""
    token = _DEADLINE.set(timestamp)
    try:
        yield
    finally:
        _DEADLINE.reset(token)


def current_deadline() -> float | None:
    """Return the active deadline, if any."""
    return _DEADLINE.get()


def check_deadline() -> None:
    """Raise if the active deadline has passed."""
    deadline = _DEADLINE.get()
    if deadline is not None and time.monotonic() > deadline:
        _LOGGER.debug("Deadline exceeded by %.3fs", time.monotonic() - deadline)
        msg = "Time limit exceeded"
        raise SearchTimeoutError(msg)
