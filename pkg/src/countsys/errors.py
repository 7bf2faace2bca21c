"""Exception types shared across the package."""


class CountingError(Exception):
    """Base class for every error raised by countsys."""


class InvalidAtomError(CountingError, ValueError):
    pass


class TooLargeError(CountingError, ValueError):
    """A brute-force size guard was exceeded."""


class EmptySystemError(CountingError, ValueError):
    pass


class BadOrderError(CountingError, ValueError):
    pass


class ValidationError(CountingError, ValueError):
    """Malformed counting system; ``index`` points at the offending entry when known."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class RequiresMinimalError(CountingError, ValueError):
    pass


class UnreachableElementError(CountingError, ValueError):
    pass


class CannotRestrictError(CountingError, ValueError):
    pass


class NotEquinumerousError(CountingError, ValueError):
    pass


class CarrierMismatchError(CountingError, ValueError):
    pass


class UnknownLawError(CountingError, ValueError):
    pass


class NatOverflowError(CountingError, OverflowError):
    """Raised when the bounded naturals run past their cap."""
