"""Exception types shared across the package."""


class PentaError(Exception):
    """Base class for all package errors."""


class DomainError(PentaError, ValueError):
    """Input outside the mathematical domain of an operation."""


class ConePointError(PentaError):
    """A trajectory hit a cone point of the surface."""

    def __init__(self, point=None, message: str = ""):
        self.point = point
        super().__init__(message or f"trajectory hits a cone point at {point}")


class StepLimitError(PentaError):
    """An iteration cap was exceeded (malformed or non-periodic input)."""


class InvariantError(PentaError):
    """An internal cross-check failed; indicates a bug, not bad input."""
