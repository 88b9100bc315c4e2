"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Rejected input: bad type/rank, malformed ideal, non-antichain, ..."""


class NotGradedError(ValueError):
    """The cover relation does not admit a rank function."""


class EnumerationLimitError(RuntimeError):
    """Enumeration would exceed the configured bound."""

    def __init__(self, what, bound):
        super().__init__(f"{what} exceeds the enumeration bound of {bound}")
        self.what = what
        self.bound = bound


class InvariantViolation(RuntimeError):
    """An internal consistency check failed."""
