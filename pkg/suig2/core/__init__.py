"""Core utilities for suig2."""

from suig2.core.budget import Deadline
from suig2.core.exceptions import (
    BudgetExceededError,
    DisconnectedProjectionError,
    EmptyInputError,
    InputError,
    InternalError,
    MalformedPeripheryError,
    NoSpecialVertexError,
    NotATreeError,
    ParseError,
    SearchBudgetError,
    StructureError,
    Suig2Error,
    TooLargeError,
)
from suig2.core.logging import get_logger, setup_logging

__all__ = [
    "BudgetExceededError",
    "Deadline",
    "DisconnectedProjectionError",
    "EmptyInputError",
    "InputError",
    "InternalError",
    "MalformedPeripheryError",
    "NoSpecialVertexError",
    "NotATreeError",
    "ParseError",
    "SearchBudgetError",
    "StructureError",
    "Suig2Error",
    "TooLargeError",
    "get_logger",
    "setup_logging",
]
