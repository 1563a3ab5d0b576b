"""Exceptions raised by polylink."""

from __future__ import annotations


class PolylinkError(Exception):
    """Exception to indicate a general polylink error."""


class InvalidInputError(PolylinkError):
    """Exception to indicate malformed or out-of-range input."""


class InvalidPolytopeError(InvalidInputError):
    """Exception to indicate an incidence table that is not a polytope."""


class InvalidPairingError(InvalidInputError):
    """Exception to indicate a pairing that does not fit its graph."""


class StructuralDefectError(InvalidInputError):
    """Exception to indicate a cofacet structure no polytope can have."""


class ExpressionSyntaxError(InvalidInputError):
    """Exception to indicate a construction expression that does not parse."""

    def __init__(self, message: str, position: int) -> None:
        """Initialize with the offending character offset."""
        super().__init__(f"{message} at position {position}")
        self.position = position


class PreconditionError(PolylinkError):
    """Exception to indicate that a constructive algorithm does not apply."""


class LinkageAssemblyError(PolylinkError):
    """Exception to indicate a constructive linkage that failed validation."""


class TheoremViolationError(PolylinkError):
    """Exception to indicate a result contradicting a proven bound."""


class SearchTimeoutError(PolylinkError):
    """Exception to indicate that the time limit expired mid-search."""
