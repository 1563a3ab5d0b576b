"""Configuration loading for the polylink command line."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import TYPE_CHECKING, Any

import voluptuous as vol
import yaml

from .const import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_PAIRING_SAMPLE,
    DEFAULT_SUITE_MAX_VERTICES,
    DEFAULT_WORKERS,
    LOG_LEVELS,
    SUITES,
)
from .exceptions import InvalidInputError

if TYPE_CHECKING:
    from os import PathLike

_LOGGER = logging.getLogger(__name__)

_LEVEL = vol.All(str, vol.Lower, vol.In(LOG_LEVELS))

CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional("logger", default={}): {
            vol.Optional("default", default=DEFAULT_LOG_LEVEL): _LEVEL,
            vol.Optional("logs", default={}): {str: _LEVEL},
        },
        vol.Optional("verify", default={}): {
            vol.Optional("workers", default=DEFAULT_WORKERS): vol.All(
                int, vol.Range(min=1)
            ),
            vol.Optional("pairing_sample", default=DEFAULT_PAIRING_SAMPLE): vol.All(
                int, vol.Range(min=1)
            ),
            vol.Optional("time_limit", default=None): vol.Any(
                None, vol.All(vol.Coerce(float), vol.Range(min=0, min_included=False))
            ),
            vol.Optional("max_vertices", default={}): {
                vol.In(SUITES): vol.All(int, vol.Range(min=0))
            },
        },
    },
    extra=vol.PREVENT_EXTRA,
)


@dataclass(frozen=True)
class PolylinkConfig:
    """Validated settings: logger levels and verification limits."""

    log_default: str = DEFAULT_LOG_LEVEL
    log_levels: dict[str, str] = field(default_factory=dict)
    workers: int = DEFAULT_WORKERS
    pairing_sample: int = DEFAULT_PAIRING_SAMPLE
    time_limit: float | None = None
    max_vertices: dict[str, int] = field(
        default_factory=lambda: dict(DEFAULT_SUITE_MAX_VERTICES)
    )

    def vertex_cap(self, suite: str) -> int:
        """Return the vertex cap of a verification suite."""
        return self.max_vertices.get(suite, DEFAULT_SUITE_MAX_VERTICES[suite])

    def with_overrides(self, **changes: Any) -> PolylinkConfig:
        """Return a copy with the non-None changes applied."""
        return replace(
            self, **{key: value for key, value in changes.items() if value is not None}
        )


def config_from_dict(document: Any) -> PolylinkConfig:
    """Validate a decoded configuration document."""
    try:
        data = CONFIG_SCHEMA(document if document is not None else {})
    except vol.Invalid as exception:
        msg = f"Invalid configuration: {exception}"
        raise InvalidInputError(msg) from exception
    logger, verify = data["logger"], data["verify"]
    return PolylinkConfig(
        log_default=logger["default"],
        log_levels=dict(logger["logs"]),
        workers=verify["workers"],
        pairing_sample=verify["pairing_sample"],
        time_limit=verify["time_limit"],
        max_vertices={**DEFAULT_SUITE_MAX_VERTICES, **verify["max_vertices"]},
    )


def load_config(path: str | PathLike[str] | None = None) -> PolylinkConfig:
    """Read a YAML configuration file; None gives the built-in defaults."""
    if path is None:
        return PolylinkConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exception:
        msg = f"Cannot read configuration {path}: {exception}"
        raise InvalidInputError(msg) from exception
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as exception:
        msg = f"Configuration {path} is not valid YAML: {exception}"
        raise InvalidInputError(msg) from exception
    config = config_from_dict(document)
    _LOGGER.debug("Loaded configuration from %s: %s", path, config)
    return config
