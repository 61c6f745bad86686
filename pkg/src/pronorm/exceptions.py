"""Custom exceptions for the pronorm engine."""

from __future__ import annotations


class PronormError(Exception):
    """Base exception for all pronorm errors."""

    def __init__(self, message: str, context: str | None = None):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self) -> str:
        if self.context:
            return f"{self.message} ({self.context})"
        return self.message


class PermutationError(PronormError):
    """Raised when image data or cycle text does not describe a bijection."""

    pass


class DegreeError(PronormError):
    """Raised when degrees disagree or exceed the supported cap."""

    def __init__(
        self,
        message: str,
        context: str | None = None,
        expected: int | None = None,
        actual: int | None = None,
    ):
        super().__init__(message, context)
        self.expected = expected
        self.actual = actual


class ContainmentError(PronormError):
    """Raised when a subgroup argument is not contained in the ambient group."""

    pass


class NotNormalError(PronormError):
    """Raised when an operation needs a normal subgroup and did not get one."""

    pass


class NotHallError(PronormError):
    """Raised when a subgroup was expected to be a Hall subgroup."""

    pass


class HomomorphismError(PronormError):
    """Raised when generator images do not extend to a homomorphism."""

    pass


class ExhaustiveBoundError(PronormError):
    """Raised when exhaustive search is requested on a group that is too large."""

    def __init__(self, message: str, context: str | None = None, bound: int | None = None):
        super().__init__(message, context)
        self.bound = bound


class OrderBoundExceeded(PronormError):
    """Raised when a group grows past an order bound.

    The chain builder raises it to prune joins that cannot be useful, and the
    CLI raises it for inputs beyond ``--max-order``.
    """

    def __init__(self, message: str, context: str | None = None, bound: int | None = None):
        super().__init__(message, context)
        self.bound = bound


class UnsupportedGroupError(PronormError):
    """Raised for group families, parameters or expectation sources outside the catalog."""

    pass


class ParseError(PronormError):
    """Raised when user supplied text (group spec, prime set, selector) cannot be parsed."""

    pass
