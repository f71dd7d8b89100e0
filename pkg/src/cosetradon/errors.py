"""Exception types shared across the package."""

from __future__ import annotations


class CosetRadonError(ValueError):
    """Base class for all structured errors raised by this package."""


class ValidationError(CosetRadonError):
    """An object failed its construction-time invariants.

    ``witness`` carries machine-readable counterexample data, e.g. the triple
    of element indices violating associativity.
    """

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(CosetRadonError):
    """An operation was called outside its stated domain (e.g. L not in H)."""


class SpaceMismatchError(CosetRadonError):
    """Two values that must live on the same space do not."""
