"""Loopcut error classes.

Flat hierarchy under ``LoopcutError``; each class carries the process exit
code the CLI maps it to.
"""

from __future__ import annotations


class LoopcutError(Exception):
    """Base exception for all loopcut errors.

    The CLI and the MCP tools let these propagate up to a single handler.
    Keep messages short and actionable.
    """

    exit_code: int = 2


class ValidationError(LoopcutError):
    """Invalid input provided by the caller (exit 1)."""

    exit_code = 1


class ParseError(ValidationError):
    """Malformed graph, network or manifest text (exit 1)."""

    def __init__(self, message: str, line: int, source: str = "<input>") -> None:
        self.line = line
        self.source = source
        super().__init__(f"{source}:{line}: {message}")


class NotFoundError(LoopcutError):
    """Referenced vertex or split id does not exist (exit 1)."""

    exit_code = 1


class ConfigurationError(LoopcutError):
    """Invalid configuration provided (exit 1)."""

    exit_code = 1


class SolverError(LoopcutError):
    """A solver could not produce a valid result (exit 2)."""

    exit_code = 2


class UnbreakableCycleError(SolverError):
    """A cycle has no finite-weight vertex to break it (exit 2)."""


class BudgetExceededError(SolverError):
    """The exact oracle ran past its vertex or node budget (exit 2)."""


class CapExceededError(BudgetExceededError):
    """Enumeration produced more sets than the caller allowed (exit 2)."""


class SelfCheckError(SolverError):
    """A solver result failed re-validation (exit 2)."""
