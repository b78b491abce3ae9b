"""Error types shared across the package."""


class WeylhomError(Exception):
    """Base class for package errors."""


class InvalidInputError(WeylhomError):
    """Malformed or inconsistent input (bad partition, size mismatch, non-prime p, ...)."""


class ResourceCapError(WeylhomError):
    """A computation would exceed the configured ambient-dimension cap."""

    def __init__(self, message, size=None, cap=None):
        super().__init__(message)
        self.size = size
        self.cap = cap
