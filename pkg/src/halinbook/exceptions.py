"""Exception types shared across the package."""

from __future__ import annotations


class HalinBookError(Exception):
    """Base class for all package-specific errors."""


class GuardExceededError(HalinBookError):
    """An exact solver was asked to run beyond its configured size guard."""


class InvalidHalinError(HalinBookError, ValueError):
    """A (tree, leaf cycle) pair is not a valid Halin graph.

    Carries the full list of violated invariants, one message per violation.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DocumentError(HalinBookError, ValueError):
    """A JSON document failed to parse or referenced undeclared labels."""


class ConstructionError(HalinBookError):
    """The constructive embedder produced an embedding that failed both
    validation and repair.  ``instance`` holds a serializable payload of the
    failing step for bug reports."""

    def __init__(self, message: str, instance: dict | None = None):
        self.instance = instance or {}
        super().__init__(message)


class RepairError(HalinBookError):
    """No conflict-free reassignment of the movable edges exists within the
    fixed page count."""

    def __init__(self, message: str, unplaced: list | None = None):
        self.unplaced = unplaced or []
        super().__init__(message)
