"""Exception types shared across the library."""


class EvtEntropyError(Exception):
    """Base class for all library errors."""


class DomainError(EvtEntropyError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SupportError(DomainError):
    """Two laws have incompatible supports (relative entropy undefined)."""


class NumericalError(EvtEntropyError, RuntimeError):
    """A numerical routine failed to converge.

    The best available estimate, if any, is kept on ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
