"""Exception hierarchy shared by every module."""


class LensObstructError(Exception):
    """Base class for all library errors."""


class InvalidLensSpace(LensObstructError, ValueError):
    pass


class NotCoprime(InvalidLensSpace):
    pass


class InvalidCoefficient(LensObstructError, ValueError):
    pass


class InvalidRotation(LensObstructError, ValueError):
    pass


class CapacityExceeded(LensObstructError):
    """Raised when an enumeration would exceed its cap."""

    def __init__(self, count, cap):
        super().__init__(f"enumeration would produce {count} items, cap is {cap}")
        self.count = count
        self.cap = cap


class OutOfScope(LensObstructError, ValueError):
    pass


class InvalidAlexander(LensObstructError, ValueError):
    pass


class InternalConsistencyError(LensObstructError, AssertionError):
    """An oracle disagreed with the path it checks. Must never fire."""
