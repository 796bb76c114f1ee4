"""Exception types shared across the package."""


class UCycleError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgument(UCycleError, ValueError):
    pass


class UnsupportedSpec(InvalidArgument):
    """The requested operation is not defined for this class/parameters."""


class EmptyClass(UCycleError):
    pass


class PreconditionViolation(UCycleError):
    """Raised when a graph operation's structural precondition fails.

    ``evidence`` carries the audit or witness that shows why.
    """

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class ConsistencyError(UCycleError):
    """An internal identity failed to hold; indicates a bug, not bad input."""
