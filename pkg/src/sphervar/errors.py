"""Exception types shared across the package."""


class SphervarError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SphervarError):
    """An argument violates a documented precondition or schema."""


class CapExceededError(SphervarError):
    """A bounded search or enumeration ran past its cap.

    Raised instead of returning a possibly wrong answer; usually a sign
    that the input data is inconsistent (e.g. an infinite reflection
    group) or genuinely above desk scale.
    """


class NotApplicableError(SphervarError):
    """The operation is undefined for this input shape."""
