"""
Custom exceptions for suig2.

Provides a hierarchy of exceptions for error handling and reporting.
Every error carries the process exit code the CLI should terminate with.
"""

from typing import Any, Dict, Optional

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class Suig2Error(Exception):
    """Base exception for all suig2 errors."""

    def __init__(
        self,
        message: str,
        *,
        exit_code: int = EXIT_REJECTED,
        detail: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code
        self.detail = detail or message
        self.context = context or {}

    def __str__(self) -> str:
        if self.context:
            return f"{self.message} (context: {self.context})"
        return self.message


class InputError(Suig2Error):
    """Raised when an input document cannot be turned into a valid object."""

    def __init__(
        self,
        message: str,
        *,
        line: Optional[int] = None,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        ctx = context or {}
        if line is not None:
            ctx["line"] = line
        super().__init__(message, exit_code=EXIT_USAGE, context=ctx)


class ParseError(InputError):
    """Raised on a malformed token or line in an edge list or JSON document."""


class EmptyInputError(InputError):
    """Raised when an edge list contains no vertices."""

    def __init__(self, message: str = "Input contains no edges or vertices") -> None:
        super().__init__(message)


class NotATreeError(InputError):
    """Raised when a parsed graph has a cycle or is disconnected."""

    def __init__(
        self,
        message: str,
        *,
        reason: str,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        ctx = context or {}
        ctx["reason"] = reason
        super().__init__(message, context=ctx)
        self.reason = reason


class StructureError(Suig2Error):
    """Raised when the tree structure rules out a representation."""

    def __init__(
        self,
        message: str,
        *,
        vertex: Optional[int] = None,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        ctx = context or {}
        if vertex is not None:
            ctx["vertex"] = vertex
        super().__init__(message, exit_code=EXIT_REJECTED, context=ctx)
        self.vertex = vertex


class NoSpecialVertexError(StructureError):
    """Raised when no closed neighborhood covers every branch vertex."""


class MalformedPeripheryError(StructureError):
    """Raised when a vertex is neither red, an agent, nor on a tail."""


class GeometryError(Suig2Error):
    """Raised when a representation violates a geometric precondition."""


class DisconnectedProjectionError(GeometryError):
    """Raised when the x-projections of a vertex set do not form one interval."""

    def __init__(
        self,
        message: str = "Projection of the vertex set is not a single interval",
        *,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message, exit_code=EXIT_REJECTED, context=context)


class OracleError(Suig2Error):
    """Base class for brute-force search errors."""


class TooLargeError(OracleError):
    """Raised when an instance exceeds the search size cap."""

    def __init__(self, n: int, max_n: int) -> None:
        super().__init__(
            f"Instance has {n} vertices, search is limited to {max_n}",
            exit_code=EXIT_USAGE,
            context={"n": n, "max_n": max_n},
        )


class BudgetExceededError(OracleError):
    """Raised when a time budget runs out before a search is exhausted."""

    def __init__(
        self,
        message: str = "Time budget exceeded",
        *,
        budget_seconds: Optional[float] = None,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        ctx = context or {}
        if budget_seconds is not None:
            ctx["budget_seconds"] = budget_seconds
        super().__init__(message, exit_code=EXIT_BUDGET, context=ctx)


class InternalError(Suig2Error):
    """Raised when an internal consistency check fails (a bug, never a verdict)."""


class SearchBudgetError(Suig2Error):
    """Raised when a recognizer stage ran out of realization nodes instead of proving a rejection."""

    def __init__(
        self,
        message: str = "Realization search budget exhausted",
        *,
        stage: Optional[int] = None,
        node_budget: Optional[int] = None,
    ) -> None:
        ctx: Dict[str, Any] = {}
        if stage is not None:
            ctx["stage"] = stage
        if node_budget is not None:
            ctx["node_budget"] = node_budget
        super().__init__(message, exit_code=EXIT_BUDGET, context=ctx)
        self.stage = stage
