"""Exception types shared across the library."""

from __future__ import annotations


class ReconfigError(Exception):
    """Base class for all library errors."""


class DomainError(ReconfigError):
    """Malformed input or a violated precondition."""


class CapacityError(ReconfigError):
    """The state space exceeds the configured cap."""


class GenerationError(ReconfigError):
    """Random generation exhausted its retry budget."""


class CertificationError(ReconfigError):
    """Expander certification failed after the retry budget."""


class InvalidSequenceError(ReconfigError):
    """A sequence violates adjacency, feasibility, or a value requirement.

    ``index`` points at the offending state or step.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message if index is None else f"{message} (index {index})")
        self.index = index
