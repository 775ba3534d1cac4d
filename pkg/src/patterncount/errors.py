"""Exception types shared across the package."""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """A search hit its node/time cap or a size guard.

    Raised instead of returning a truncated count.
    """

    def __init__(self, message: str, nodes: int = 0, elapsed: float = 0.0):
        super().__init__(message, nodes, elapsed)
        self.message = message
        self.nodes = nodes
        self.elapsed = elapsed

    def __str__(self) -> str:
        return self.message


class LemmaInapplicable(ValueError):
    """The hypotheses of a checked statement are not met by the input."""


class InvariantViolation(AssertionError):
    """An exact check that must hold by construction did not hold."""
