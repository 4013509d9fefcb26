"""
Exit-status mapping for command failures.

Every failure becomes one line on stderr and a process exit code.
"""

import sys

from pydantic import ValidationError as PydanticValidationError

from suig2.core.exceptions import EXIT_REJECTED, EXIT_USAGE, Suig2Error
from suig2.core.logging import get_logger

logger = get_logger(__name__)


def handle_errors(exc: BaseException) -> int:
    """
    Report an exception raised by a command and choose the exit code.

    Args:
        exc: The exception that escaped the command

    Returns:
        int: Process exit code
    """
    if isinstance(exc, Suig2Error):
        logger.error(
            f"{type(exc).__name__}: {exc.message}",
            extra={"context": exc.context, "exit_code": exc.exit_code},
        )
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code

    if isinstance(exc, PydanticValidationError):
        logger.error(f"ValidationError: {exc.errors()}")
        first = exc.errors()[0] if exc.errors() else {"msg": str(exc)}
        print(f"error: invalid setting: {first['msg']}", file=sys.stderr)
        return EXIT_USAGE

    if isinstance(exc, OSError):
        print(f"error: {exc.strerror or exc}: {exc.filename}", file=sys.stderr)
        return EXIT_USAGE

    if isinstance(exc, KeyboardInterrupt):
        print("\nInterrupted", file=sys.stderr)
        return EXIT_REJECTED

    logger.exception(f"Unhandled exception: {exc}")
    print("error: an unexpected error occurred", file=sys.stderr)
    return EXIT_REJECTED
