"""Exception types shared across the package."""

from __future__ import annotations


class ParameterError(ValueError):
    """Invalid input parameters (non-prime p, bad twist, dependent points, ...)."""


class NormCollisionError(ParameterError):
    """Two entries of an LRS alpha tuple have the same norm."""

    def __init__(self, i: int, j: int, message: str | None = None) -> None:
        self.pair = (i, j)
        super().__init__(message or f"alpha[{i}] and alpha[{j}] have equal norms")


class CapExceededError(RuntimeError):
    """An exhaustive enumeration would exceed its configured size cap."""


class InvariantViolation(AssertionError):
    """A checked identity failed. Always a bug or a genuine counterexample."""
