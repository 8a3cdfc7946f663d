# app/utils/budget.py

from __future__ import annotations

import time

from app.services.errors import BudgetExceeded

# Clock reads are comparatively slow; poll the deadline every this many ticks.
_CHECK_EVERY = 1024


class Budget:
    """
    Cooperative cancellation token shared by the exhaustive searches.

    seconds: wall-clock allowance from construction (None = unlimited)
    max_nodes: search-node allowance (None = unlimited)
    """

    __slots__ = ("deadline", "max_nodes", "nodes", "_next_check")

    def __init__(self, seconds: float | None = None, max_nodes: int | None = None):
        if seconds is not None and seconds <= 0:
            raise ValueError(f"Budget seconds must be positive, got {seconds}")
        self.deadline = time.monotonic() + seconds if seconds is not None else None
        self.max_nodes = max_nodes
        self.nodes = 0
        self._next_check = _CHECK_EVERY

    @classmethod
    def until(cls, deadline: float | None) -> "Budget":
        """Budget ending at an absolute time.monotonic() deadline (used inside workers)."""
        b = cls()
        b.deadline = deadline
        return b

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"Node budget of {self.max_nodes} exhausted")
        if self.nodes >= self._next_check:
            self._next_check = self.nodes + _CHECK_EVERY
            self.check()

    def check(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("Time budget exhausted")

    @property
    def remaining(self) -> float | None:
        if self.deadline is None:
            return None
        return max(0.0, self.deadline - time.monotonic())


def tick(budget: Budget | None, count: int = 1) -> None:
    if budget is not None:
        budget.tick(count)
