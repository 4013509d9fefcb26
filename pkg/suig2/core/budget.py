"""
Time budgets for long-running searches.

A search polls its deadline between units of work; an expired deadline
raises BudgetExceededError so that callers can report UNKNOWN instead of a
verdict.
"""

import time
from typing import Optional

from suig2.core.exceptions import BudgetExceededError
from suig2.core.logging import get_logger

logger = get_logger(__name__)


class Deadline:
    """
    Wall-clock deadline polled by brute-force searches.

    A deadline built from ``None`` never expires.
    """

    def __init__(self, budget_seconds: Optional[float] = None) -> None:
        self.budget_seconds = budget_seconds
        self._start = time.perf_counter()
        self._polls = 0

    @property
    def elapsed(self) -> float:
        """Seconds since the deadline was created."""
        return time.perf_counter() - self._start

    @property
    def expired(self) -> bool:
        if self.budget_seconds is None:
            return False
        return self.elapsed > self.budget_seconds

    def check(self, where: str = "search") -> None:
        """
        Raise if the budget is exhausted.

        Args:
            where: Label of the polling site, recorded in the error context

        Raises:
            BudgetExceededError: If the deadline has passed
        """
        self._polls += 1
        if self.expired:
            logger.warning(
                f"Budget of {self.budget_seconds}s exhausted in {where} after {self._polls} polls",
                extra={"elapsed": self.elapsed},
            )
            raise BudgetExceededError(
                f"Time budget exceeded during {where}",
                budget_seconds=self.budget_seconds,
                context={"polls": self._polls},
            )
