# app/services/errors.py

from __future__ import annotations


class ParameterError(ValueError):
    """A parameter lies outside the domain an operation is defined on."""


class Graph6ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetExceeded(RuntimeError):
    """Raised by a search once its time or node budget is spent."""


class TheoremViolation(RuntimeError):
    """
    An exhaustive run observed a value the theorem forbids.

    Carries the report that was being built and one offending graph (graph6),
    so callers can print a reproducer.
    """

    def __init__(self, message: str, report=None, counterexample: str | None = None):
        super().__init__(message)
        self.report = report
        self.counterexample = counterexample


# HTTP status per error, for the API routes.
HTTP_STATUS = {
    ParameterError: 400,
    Graph6ParseError: 400,
    BudgetExceeded: 408,
    TheoremViolation: 409,
}


def http_status(exc: Exception) -> int:
    for cls, status in HTTP_STATUS.items():
        if isinstance(exc, cls):
            return status
    return 500
