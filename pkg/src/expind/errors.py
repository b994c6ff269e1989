from __future__ import annotations

from collections.abc import Sequence


class ExpindError(Exception):
    """Base class for every error raised by expind."""


class GraphFormatError(ExpindError, ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InvalidGraphError(ExpindError, ValueError):
    """A graph or parameter violates an operation's precondition."""


class BudgetExceededError(ExpindError):
    """The search visited more nodes than the configured budget allows."""

    def __init__(self, nodes: int, lower_bound: int, witness: Sequence[int]) -> None:
        self.nodes = nodes
        self.lower_bound = lower_bound
        self.witness = tuple(witness)
        super().__init__(
            f"node budget exceeded after {nodes} nodes (best known lower bound {lower_bound})"
        )


class ConsistencyError(ExpindError, AssertionError):
    """Two independent computations that must agree did not."""
