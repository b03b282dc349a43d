"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An argument violates a documented precondition (bad element, shape
    mismatch, malformed file, unsupported field order)."""


class EnumerationCapError(RuntimeError):
    """An exhaustive scan would exceed the configured enumeration cap."""


class MonotonicityError(ValidationError):
    """A verifier requiring a monotone decreasing function was handed a
    non-monotone one.  Carries the violating (word, coordinate, value)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
