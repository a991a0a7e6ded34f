"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class DivergenceError(DomainError):
    """The requested series (or zeta argument) diverges."""

    def __init__(self, message: str, r: int | None = None, m: int | None = None):
        super().__init__(message)
        self.r = r
        self.m = m


class CapacityError(ArithmeticError):
    """A zeta product would leave the degree <= 2 basis."""


class AccuracyError(ArithmeticError):
    """A numeric procedure failed to reach its tolerance within its iteration cap."""
